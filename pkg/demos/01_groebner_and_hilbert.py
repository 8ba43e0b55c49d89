"""Gröbner bases and Hilbert functions of graded algebras.

Run with ``python3 demos/01_groebner_and_hilbert.py``.
"""
from __future__ import annotations

from ncproj import GradedAlgebra, parse_presentation, polynomial_ring, quantum_plane

# %% A presentation is plain text: a field, weighted generators, homogeneous relations.
text = """
field Q
gen x 1
gen y 1
rel y*x - 2*x*y
"""
qplane = GradedAlgebra(parse_presentation(text), 8, name="k_2[x,y]")
print(qplane.name, "dims:", qplane.hilbert())  # normal words x^a y^b: i + 1 in degree i

# %% The truncated Gröbner basis is complete up to the bound D.
for g in qplane.gb.elements:
    print("  GB element:", g)

# %% Weighted polynomial rings: the Hilbert function counts monomials of each weight.
wtd = polynomial_ring([1, 2], 10, names=["x", "z"])
print("k[x,z], wt (1,2):", wtd.hilbert())

# %% Normal words give a basis; products reduce to normal form.
x, y = qplane.free.gens()
print("y*y*x reduces to", qplane.gb.normal_form(y * y * x))
print("basis of degree 3:", [qplane.free.word_str(w) for w in qplane.basis(3)])

# %% Changing q does not change the Hilbert function of a quantum plane.
for q in (1, -1, 3):
    print(f"q = {q}:", quantum_plane(q, 6).hilbert())
