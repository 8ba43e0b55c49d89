from __future__ import annotations

import itertools

import pytest

from ncproj.bimodules import adjunction_check, bar_tensor, coinduce_along, underline_hom, watts_bimodule
from ncproj.errors import WindowInsufficient
from ncproj.loaders import module_from_spec
from ncproj.modules import regular_module, restrict_along, shift, zero_module
from ncproj.morphism import AlgebraMorphism
from ncproj.samples import polynomial_ring, quantum_plane
from ncproj.veronese import veronese_algebra

D = 7


@pytest.fixture(scope="module")
def maps():
    kxy = polynomial_ring([1, 1], D)
    ky = polynomial_ring([1], D, names=["y"])
    qp = quantum_plane(2, D)
    kx = polynomial_ring([1], D)
    ku = polynomial_ring([2], D, names=["u"])
    wtd = polynomial_ring([1, 2], D, names=["x", "z"])
    return {
        "id": AlgebraMorphism.identity(kxy),
        "y->k[x,y]": AlgebraMorphism(ky, kxy, [kxy.free.gen(1)]),
        "y->k_2[x,y]": AlgebraMorphism(ky, qp, [qp.free.gen(1)]),
        "u->x^2": AlgebraMorphism(ku, kx, [kx.free.gen(0) * kx.free.gen(0)]),
        "veronese k[x,y]": veronese_algebra(kxy, 2, D).embedding,
        "veronese k[x,z]": veronese_algebra(wtd, 2, D).embedding,
    }


def test_identity_bimodule_rows_are_shifts(maps):
    phi = maps["id"]
    w = watts_bimodule(phi)
    a = phi.source
    for p in range(-2, 3):
        assert w.row(p).dims() == shift(regular_module(a), p).dims()
    assert w.check_bimodule(range(-2, 3), range(0, 4)) == []


@pytest.mark.parametrize("name", ["y->k[x,y]", "y->k_2[x,y]", "veronese k[x,y]", "u->x^2"])
def test_actions_commute(maps, name):
    w = watts_bimodule(maps[name])
    assert w.check_bimodule(range(-2, 3), range(0, 3)) == []


@pytest.mark.parametrize("name", ["id", "y->k[x,y]", "veronese k[x,z]", "u->x^2"])
def test_tensor_with_regular_module_is_the_functor(maps, name):
    phi = maps[name]
    b = phi.target
    w = watts_bimodule(phi)
    for p in (0, 1):
        t = bar_tensor(shift(regular_module(b), p), w)
        r = restrict_along(phi, shift(regular_module(b), p))
        top = min(t.hi, r.hi)
        assert t.dims(max(t.lo, r.lo), top) == r.dims(max(t.lo, r.lo), top)


def test_tensor_of_zero_module(maps):
    phi = maps["id"]
    t = bar_tensor(zero_module(phi.target, 0, 3), watts_bimodule(phi))
    assert t.is_zero_on_window()


def test_tensor_of_residue_field_along_identity(maps):
    phi = maps["id"]
    k = module_from_spec("k", phi.target)
    t = bar_tensor(k, watts_bimodule(phi))
    assert t.dims()[:4] == [1, 0, 0, 0]


def test_underline_hom_identity(maps):
    phi = maps["id"]
    n = module_from_spec("A", phi.source)
    h = underline_hom(watts_bimodule(phi), n)
    top = min(h.hi, n.hi)
    assert h.dims(0, top) == n.dims(0, top)


def test_coinduce_infinite_rank_is_reported(maps):
    phi = maps["y->k[x,y]"]
    with pytest.raises(WindowInsufficient):
        coinduce_along(phi, module_from_spec("k", phi.source))


def test_coinduce_finite_along_veronese(maps):
    phi = maps["veronese k[x,z]"]
    h = coinduce_along(phi, module_from_spec("k", phi.source))
    nz = [e for e in range(h.lo, h.hi + 1) if h.dim(e)]
    assert nz == [-1, 0]


@pytest.mark.parametrize("name", ["id", "y->k[x,y]", "u->x^2", "veronese k[x,y]", "veronese k[x,z]"])
def test_adjunction_dimensions(maps, name):
    phi = maps[name]
    w = watts_bimodule(phi)
    for ls, ns in itertools.product(["A", "A(1)", "k", "m"], ["A", "k"]):
        s = adjunction_check(module_from_spec(ls, phi.target), w, module_from_spec(ns, phi.source))
        assert s.ok, (name, ls, ns, s)
