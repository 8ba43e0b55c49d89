"""Right ideals, two-sidedness and graded quotients.

Run with ``python3 demos/03_ideals_and_closed_immersions.py``.
"""
from __future__ import annotations

from ncproj import (
    RIGHT,
    AlgebraMorphism,
    GradedIdeal,
    check_affine_hypothesis,
    is_twosided,
    largest_twosided_inside,
    module_times_ideal,
    polynomial_ring,
    quantum_plane,
    quotient_algebra,
    quotient_inflate,
    quotient_pullback,
    regular_module,
    torsion_submodule,
)

# %% In k_q[x,y] the right ideal (x + y)A is two-sided only when q = 1.
for q in (1, 2, -1):
    A = quantum_plane(q, 6)
    x, y = A.free.gens()
    K = GradedIdeal.generated_by(A, [x + y], RIGHT)
    ok, witness = is_twosided(K)
    print(f"q = {q:2d}: (x+y)A two-sided? {ok}", "" if ok else f"  witness: {witness}")

# %% The largest two-sided ideal inside a right ideal.
A = quantum_plane(2, 6)
x, y = A.free.gens()
J = largest_twosided_inside(GradedIdeal.generated_by(A, [x + y], RIGHT))
print("largest two-sided ideal inside (x+y)A has dims", J.dims())

# %% Is k[y] -> k[x,y] affine?  We look for n with B f(m)^n inside f(m) B.
B = polynomial_ring([1, 1], 6)
ky = polynomial_ring([1], 6, names=["y"])
res = check_affine_hypothesis(AlgebraMorphism(ky, B, [B.free.gen(1)]), 4)
print("affine exponent:", res.n, "certified through degree", res.certified_upto)

# %% A graded quotient A -> A/J gives a triple of functors i^*, i_*, i^!.
A = polynomial_ring([1, 1], 6)
x, y = A.free.gens()
J = GradedIdeal.generated_by(A, [x * x - y * y])
Q = quotient_algebra(J)
print("A/J dims:", Q.hilbert())

M = regular_module(A, window=(0, 5))
pulled = quotient_pullback(J, M, Q)           # i^* M = M / MJ
MJ = module_times_ideal(M, J)
print("dim M    :", M.dims())
print("dim MJ   :", [MJ[e].dim for e in range(M.lo, M.hi + 1)])
print("dim i^*M :", pulled.dims())

# %% Inflating back along A -> A/J and pulling again is the identity (counit iso).
inflated = quotient_inflate(J, pulled)
print("i^*i_*i^*M:", quotient_pullback(J, inflated, Q).dims())

# %% Every element of an inflated module is killed by J: the torsion is everything.
tors = torsion_submodule(J, inflated, Q)
print("torsion dims:", tors.dims(), "vs module dims:", inflated.dims(tors.lo, tors.hi))
