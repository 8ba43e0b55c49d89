from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncproj.errors import AlgebraNotConcentrated
from ncproj.ideals import GradedIdeal
from ncproj.loaders import module_from_spec
from ncproj.modules import direct_sum, graded_hom, present_module, regular_module, shift
from ncproj.samples import polynomial_ring, quantum_plane, random_algebra, random_skew_ring
from ncproj.veronese import (
    check_lemma_I,
    ideal_family,
    min_veronese_gen1,
    projector,
    tails_window_equal,
    verevkin_defect,
    veronese_algebra,
    veronese_pullback,
    veronese_pushforward,
)


@pytest.fixture(scope="module")
def wtd12():
    return polynomial_ring([1, 2], 12, names=["x", "z"])


def test_veronese_of_plane():
    a = polynomial_ring([1, 1], 10)
    v = veronese_algebra(a, 2, 10)
    assert v.algebra.ngens == 3
    assert v.hilbert() == [1, 3, 5, 7, 9, 11]
    # x^2, xy, y^2 noncommutatively: three commutators plus (xy)^2 = x^2 y^2
    assert len(v.algebra.presentation.relations) == 4
    assert set(v.relation_degrees) == {2}


def test_veronese_of_weighted_ring(wtd12):
    v = veronese_algebra(wtd12, 2, 12)
    assert sorted(str(g) for g in v.generator_images) == ["x*x", "z"]
    assert v.hilbert() == [1, 2, 3, 4, 5, 6, 7]
    assert len(v.algebra.presentation.relations) == 1


def test_first_veronese_is_the_algebra():
    a = quantum_plane(3, 6)
    v = veronese_algebra(a, 1, 6)
    assert v.hilbert() == a.hilbert()
    assert v.algebra.ngens == a.ngens


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(2, 3))
def test_veronese_hilbert_identity(seed, n):
    a = random_algebra(random.Random(seed), 6, max_gens=2)
    v = veronese_algebra(a, n, 6)
    assert v.hilbert() == [a.dim(n * i) for i in range(len(v.hilbert()))]


def test_ideal_family_weighted(wtd12):
    fam = ideal_family(wtd12, 2, 12)
    assert fam.I(1).describe() == "(x)"
    assert fam.I(2).describe() == "A"
    assert fam.intersection.describe() == "(x)"
    assert fam.twosided


def test_ideal_family_zero_when_odd_part_vanishes():
    a = polynomial_ring([2], 12)
    fam = ideal_family(a, 2, 12)
    assert fam.I(1).is_zero() and fam.intersection.is_zero()


def test_ideal_family_degree_one_has_finite_quotient():
    a = quantum_plane(2, 8)
    fam = ideal_family(a, 3, 8)
    codims = fam.intersection.codims()
    # A/I is finite: it lives below degree n - 1
    assert codims[:2] == [1, 2] and all(c == 0 for c in codims[2:])


def test_lemma_I(wtd12):
    rep = check_lemma_I(wtd12, 2, 12)
    assert rep.ok and not rep.trivial
    assert all(p <= t for p, t in zip(rep.power_dims, rep.target_dims))
    assert check_lemma_I(polynomial_ring([2], 12), 2, 12).trivial


def test_pushforward_of_point_vanishes(wtd12):
    x = wtd12.free.gen("x")
    pt = shift(present_module(wtd12, [0], [[x]], window=(0, 11)), 1)
    v = veronese_algebra(wtd12, 2, 12)
    assert veronese_pushforward(pt, v).is_zero_on_window()
    assert not veronese_pushforward(shift(pt, 1), v).is_zero_on_window()


def test_pullback_then_pushforward_is_identity():
    a = polynomial_ring([1, 1], 8)
    v = veronese_algebra(a, 2, 8)
    av = v.algebra
    n = direct_sum(regular_module(av), module_from_spec("k(1)", av))
    back = veronese_pushforward(veronese_pullback(n, v), v)
    top = min(back.hi, n.hi)
    assert back.dims(n.lo, top) == n.dims(n.lo, top)


def test_projectors_split_parity():
    a = polynomial_ring([2], 10)
    m = direct_sum(regular_module(a, window=(0, 9)), shift(regular_module(a, window=(0, 10)), 1))
    p0, p1 = projector(m, 2, 0), projector(m, 2, 1)
    for e in range(m.lo, m.hi + 1):
        assert p0.dim(e) + p1.dim(e) == m.dim(e)
        assert (p0.dim(e) if e % 2 == 0 else p1.dim(e)) == m.dim(e)
    assert projector(p0, 2, 0).dims() == p0.dims()
    assert projector(p0, 2, 1).is_zero_on_window()
    assert graded_hom(p0, p1, 0).dim == 0 and graded_hom(p1, p0, 0).dim == 0
    with pytest.raises(AlgebraNotConcentrated):
        projector(regular_module(polynomial_ring([1, 1], 4)), 2, 0)


def test_tails_window_equal():
    a = polynomial_ring([1, 1], 6)
    A = regular_module(a)
    assert tails_window_equal(A, module_from_spec("m", a), 1)
    assert tails_window_equal(A, direct_sum(A, module_from_spec("k", a)), 1)
    assert not tails_window_equal(A, shift(A, 1), 1, 5)


def test_verevkin_weighted(wtd12):
    rep = verevkin_defect(wtd12, 2, shift(regular_module(wtd12), 1), 12)
    assert rep.kernel_killed and rep.cokernel_killed
    assert rep.cokernel_dims[-1] == 1
    assert any(rep.cokernel_dims[e] for e in rep.cokernel_dims if e > 0)


@pytest.mark.parametrize("make", [lambda: polynomial_ring([1, 1], 8), lambda: quantum_plane(2, 8)])
def test_verevkin_generated_in_degree_one(make):
    a = make()
    rep = verevkin_defect(a, 2, regular_module(a), 8)
    assert rep.ok
    assert all(rep.kernel_dims[e] == 0 and rep.cokernel_dims[e] == 0
               for e in rep.kernel_dims if e >= 1)


def test_min_veronese():
    assert min_veronese_gen1(polynomial_ring([1, 2], 16), 6).d == 2
    assert min_veronese_gen1(polynomial_ring([2, 3], 16), 8).d == 6
    assert min_veronese_gen1(polynomial_ring([1, 1], 8), 4).d == 1
