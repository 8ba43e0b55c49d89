"""Ready-made algebras and seeded random instances for experiments and tests."""
from __future__ import annotations

import random
from typing import Sequence

from .free import FreeAlgebra, FreePoly, GeneratorInfo, Presentation, commutators
from .groebner import GradedAlgebra
from .linalg import QQ, Field

_LETTERS = "xyzuvw"


def _gens(weights: Sequence[int], names: Sequence[str] | None = None) -> list[GeneratorInfo]:
    names = names or [_LETTERS[i] if i < len(_LETTERS) else f"x{i}" for i in range(len(weights))]
    return [GeneratorInfo(n, w) for n, w in zip(names, weights)]


def polynomial_ring(weights: Sequence[int], D: int, field: Field = QQ,
                    names: Sequence[str] | None = None) -> GradedAlgebra:
    """Commutative ``k[x_1, ..., x_s]`` with the given weights."""
    gens = _gens(weights, names)
    free = FreeAlgebra(field, gens)
    label = "k[" + ",".join(g.name for g in gens) + "]"
    return GradedAlgebra(Presentation(field, gens, commutators(free)), D, name=label)


def free_algebra(weights: Sequence[int], D: int, field: Field = QQ) -> GradedAlgebra:
    gens = _gens(weights)
    return GradedAlgebra(Presentation(field, gens), D, name="k<" + ",".join(g.name for g in gens) + ">")


def skew_polynomial_ring(q: dict[tuple[int, int], object] | Sequence, weights: Sequence[int],
                         D: int, field: Field = QQ) -> GradedAlgebra:
    """``x_j x_i = q_ij x_i x_j`` for ``i < j``; ``q`` maps pairs to nonzero scalars."""
    gens = _gens(weights)
    free = FreeAlgebra(field, gens)
    if not isinstance(q, dict):
        pairs = [(i, j) for i in range(len(weights)) for j in range(i + 1, len(weights))]
        q = dict(zip(pairs, q))
    rels = []
    for (i, j), c in sorted(q.items()):
        xi, xj = free.gen(i), free.gen(j)
        rels.append(xj * xi - xi * xj * field(c))
    return GradedAlgebra(Presentation(field, gens, rels), D, name="skew")


def quantum_plane(q, D: int, field: Field = QQ) -> GradedAlgebra:
    """``k_q[x, y]``: ``y x = q x y``."""
    a = skew_polynomial_ring({(0, 1): q}, (1, 1), D, field)
    a.name = f"k_{q}[x,y]"
    return a


def random_presentation(rng: random.Random, field: Field = QQ, max_gens: int = 3,
                        max_weight: int = 2, max_rels: int = 2, max_rel_degree: int = 3,
                        max_terms: int = 4, coeff_bound: int = 3) -> Presentation:
    """Small random homogeneous presentation (at least one weight-1 generator)."""
    s = rng.randint(1, max_gens)
    weights = [1] + [rng.randint(1, max_weight) for _ in range(s - 1)]
    gens = _gens(weights)
    free = FreeAlgebra(field, gens)
    rels = []
    for _ in range(rng.randint(0, max_rels)):
        for _attempt in range(10):
            d = rng.randint(2, max_rel_degree)
            words = free.words(d)
            if not words:
                continue
            picks = rng.sample(words, min(len(words), rng.randint(1, max_terms)))
            terms = {w: field.random(rng, coeff_bound, nonzero=True) for w in picks}
            p = FreePoly(free, terms)
            if p:
                rels.append(p)
                break
    return Presentation(field, gens, rels)


def random_algebra(rng: random.Random, D: int, **kw) -> GradedAlgebra:
    return GradedAlgebra(random_presentation(rng, **kw), D, name="random")


def random_skew_ring(rng: random.Random, D: int, ngens: int = 2, field: Field = QQ,
                     weights: Sequence[int] | None = None, bound: int = 3) -> GradedAlgebra:
    """Skew polynomial ring with random nonzero ``q_ij``: Hilbert series of a polynomial ring."""
    weights = list(weights) if weights is not None else [1] * ngens
    pairs = [(i, j) for i in range(len(weights)) for j in range(i + 1, len(weights))]
    q = {p: field.random(rng, bound, nonzero=True) for p in pairs}
    return skew_polynomial_ring(q, weights, D, field)
