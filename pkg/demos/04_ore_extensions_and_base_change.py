"""Ore extensions and change of rings along algebra maps.

Run with ``python3 demos/04_ore_extensions_and_base_change.py``.
"""
from __future__ import annotations

import random

from ncproj import (
    AlgebraMorphism,
    NotADerivation,
    OreData,
    adjunction_check,
    bar_tensor,
    check_ore_data,
    diagonal_sigma,
    induce_along,
    module_from_spec,
    ore_extension,
    ore_hilbert,
    polynomial_ring,
    quantum_plane,
    random_inner_delta,
    regular_module,
    restrict_along,
    watts_bimodule,
)

# %% R[t; sigma, delta] with t in degree 2 over the quantum plane k_2[x,y].
R = quantum_plane(2, 12)
x, y = R.free.gens()
sigma = diagonal_sigma(R, [3, 5])
delta = random_inner_delta(R, sigma, 2, random.Random(7))  # delta(a) = z a - sigma(a) z
S = ore_extension(OreData(R, sigma, delta, 2), 10)
for rel in S.presentation.relations:
    print("relation:", rel)
print("dims of S:       ", S.hilbert())
print("sum_k dim R_(i-2k):", ore_hilbert(R.hilbert(10), 2, 10))

# %% A map that is not a sigma-derivation is refused.
try:
    check_ore_data(OreData(R, [x, y], [x * x, R.free.zero()], 1))
except NotADerivation as exc:
    print("rejected:", exc)

# %% Restriction and induction along k[y] -> k[x,y].
ky = polynomial_ring([1], 8, names=["y"])
kxy = polynomial_ring([1, 1], 8)
phi = AlgebraMorphism(ky, kxy, [kxy.free.gen(1)])
print("restriction of k[x,y] to k[y]:", restrict_along(phi, regular_module(kxy)).dims())
print("induction of k[y] to k[x,y]:  ", induce_along(phi, regular_module(ky)).dims())

# %% The same functors through a bimodule: tensoring with the graded bimodule of phi.
W = watts_bimodule(phi)
L = module_from_spec("k", kxy)
print("k tensored with the bimodule:", bar_tensor(L, W).dims())

# %% Both sides of the tensor-Hom adjunction have the same dimension.
for ls, ns in [("A", "A"), ("k", "k"), ("m", "k")]:
    s = adjunction_check(module_from_spec(ls, kxy), W, module_from_spec(ns, ky))
    print(f"L = {ls}, N = {ns}: dim Hom(L (x) W, N) = {s.lhs}, dim Hom(L, Hom(W, N)) = {s.rhs}")
