from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncproj.errors import NotADerivation, NotAnAutomorphism
from ncproj.groebner import GradedAlgebra
from ncproj.ore import (
    OreData,
    check_ore_data,
    diagonal_sigma,
    ore_extension,
    ore_hilbert,
    ore_presentation,
    random_inner_delta,
)
from ncproj.samples import polynomial_ring, quantum_plane, random_skew_ring


def test_convolution_formula():
    assert ore_hilbert([1, 1, 1, 1, 1], 1, 4) == [1, 2, 3, 4, 5]
    assert ore_hilbert([1, 2, 3, 4, 5], 2, 4) == [1, 2, 4, 6, 9]


def test_polynomial_extension():
    r = polynomial_ring([1], 9)
    o = OreData(r, diagonal_sigma(r, [1]), [r.free.zero()], 1)
    s = ore_extension(o, 8)
    assert s.hilbert() == list(range(1, 10))


def test_weighted_t():
    r = polynomial_ring([1], 10)
    o = OreData(r, diagonal_sigma(r, [1]), [r.free.zero()], 2)
    assert ore_extension(o, 8).hilbert() == [1, 1, 2, 2, 3, 3, 4, 4, 5]


def test_skew_and_derivation():
    r = quantum_plane(2, 9)
    x, y = r.free.gens()
    # inner: delta(u) = z u - sigma(u) z with z = x
    sigma = diagonal_sigma(r, [2, 4])
    delta = [x * x - sigma[0] * x, x * y - sigma[1] * x]
    o = OreData(r, sigma, delta, 1)
    s = ore_extension(o, 8)
    assert s.hilbert() == ore_hilbert(r.hilbert(8), 1, 8)


def test_bad_delta_rejected():
    r = quantum_plane(2, 9)
    x = r.free.gen(0)
    o = OreData(r, diagonal_sigma(r, [1, 1]), [x * x, r.free.zero()], 1)
    with pytest.raises(NotADerivation):
        check_ore_data(o)
    wrong_degree = OreData(r, diagonal_sigma(r, [1, 1]), [x, r.free.zero()], 1)
    with pytest.raises(NotADerivation):
        check_ore_data(wrong_degree)


def test_bad_sigma_rejected():
    r = quantum_plane(2, 6)
    x, y = r.free.gens()
    swap = OreData(r, [y, x], [r.free.zero()] * 2, 1)  # does not preserve y x = 2 x y
    with pytest.raises(NotAnAutomorphism):
        check_ore_data(swap)
    kxy = polynomial_ring([1, 1], 6)
    u = kxy.free.gen(0)
    singular = OreData(kxy, [u, u], [kxy.free.zero()] * 2, 1)  # x, y -> x, x
    with pytest.raises(NotAnAutomorphism):
        check_ore_data(singular)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([1, 2]))
def test_random_inner_derivations_are_valid(seed, n):
    rng = random.Random(seed)
    r = random_skew_ring(rng, 8 + n, ngens=2)
    sigma = diagonal_sigma(r, [r.field.random(rng, nonzero=True) for _ in range(2)])
    delta = random_inner_delta(r, sigma, n, rng)
    o = OreData(r, sigma, delta, n)
    check_ore_data(o)
    s = GradedAlgebra(ore_presentation(o), 8)
    assert s.hilbert() == ore_hilbert(r.hilbert(8), n, 8)


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_validity_agrees_with_pbw(seed):
    # a random delta is accepted exactly when 1, t, t^2, ... stays a free basis
    rng = random.Random(seed)
    r = random_skew_ring(rng, 8, ngens=2)
    f = r.field
    sigma = diagonal_sigma(r, [1, 1])
    delta = [r.poly([f.random(rng) for _ in range(r.dim(w + 1))], w + 1) for w in r.weights]
    o = OreData(r, sigma, delta, 1)
    s = GradedAlgebra(ore_presentation(o), 6)
    pbw = s.hilbert() == ore_hilbert(r.hilbert(6), 1, 6)
    try:
        check_ore_data(o)
        valid = True
    except NotADerivation:
        valid = False
    assert valid == pbw
