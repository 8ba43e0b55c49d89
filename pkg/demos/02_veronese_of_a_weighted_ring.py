"""Veronese subalgebras of a weighted polynomial ring.

Take ``A = k[x, z]`` with ``x`` in degree 1 and ``z`` in degree 2, and its
second Veronese ``A^(2)``.  The odd part of ``A`` is ``x A``, so the point
``A/(x)`` shifted by one has no even-degree pieces: the Veronese functor
forgets it.  This script walks through the objects that measure the failure.

Run with ``python3 demos/02_veronese_of_a_weighted_ring.py``.
"""
from __future__ import annotations

from ncproj import (
    check_lemma_I,
    ideal_family,
    min_veronese_gen1,
    polynomial_ring,
    present_module,
    regular_module,
    shift,
    verevkin_defect,
    veronese_algebra,
    veronese_pushforward,
)

D = 12
A = polynomial_ring([1, 2], D, names=["x", "z"])
print(A.name, "dims:", A.hilbert())

# %% The Veronese A^(2) is generated by x^2 and z and is again a polynomial ring.
V = veronese_algebra(A, 2, D)
print("generators:", [str(g) for g in V.generator_images])
print("relations :", [str(r) for r in V.algebra.presentation.relations])
print("dims      :", V.hilbert(), "(compare A_0, A_2, A_4, ...)")

# %% The shifted point is invisible to the Veronese functor.
x = A.free.gen("x")
point = shift(present_module(A, [0], [[x]], window=(0, D - 1)), 1)
print("point dims in degrees", point.lo, "..", point.hi, ":", point.dims())
print("pushforward vanishes:", veronese_pushforward(point, V).is_zero_on_window())

# %% The right ideals I_r and their intersection I.
fam = ideal_family(A, 2, D)
for r in (1, 2):
    print(f"I_{r} =", fam.I(r).describe())
print("I   =", fam.intersection.describe(), "| two-sided:", fam.twosided)

# %% Powers of I land inside the right ideal generated by its even part.
rep = check_lemma_I(A, 2, D)
print("I^4 dims        :", rep.power_dims)
print("(I^(2) A) dims  :", rep.target_dims)
print("contained in every degree:", rep.ok)

# %% The unit map f^* f_* M -> M for M = A(1) fails, but only up to I-torsion.
rep = verevkin_defect(A, 2, shift(regular_module(A), 1), D)
print("kernel dims  :", rep.kernel_dims)
print("cokernel dims:", rep.cokernel_dims)
print("killed by I  :", rep.kernel_killed and rep.cokernel_killed)

# %% For a ring generated in degree one the defect disappears in positive degrees.
B = polynomial_ring([1, 1], 8)
rep = verevkin_defect(B, 2, regular_module(B), 8)
print("k[x,y]: cokernel dims", rep.cokernel_dims)

# %% Which Veronese is generated in degree one?
for weights in ([1, 2], [2, 3]):
    res = min_veronese_gen1(polynomial_ring(weights, 16), 8)
    print(f"weights {weights}: smallest d with A^(d) generated in degree one is {res.d}")
