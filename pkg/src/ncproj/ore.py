"""Graded Ore extensions ``S = R[t; sigma, delta]`` with ``t r = sigma(r) t + delta(r)``.

``sigma`` is a graded automorphism of ``R``; ``delta`` is given on generators
and raises degrees by ``n = deg t``.  It is extended to words by the
sigma-Leibniz rule ``delta(uv) = sigma(u) delta(v) + delta(u) v``, and is
well defined exactly when it kills every defining relation of ``R``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import DegreeAboveBound, NotADerivation, NotAnAutomorphism, NotAMorphism
from .free import FreePoly, GeneratorInfo, Presentation, Word
from .groebner import GradedAlgebra
from .linalg import Matrix, rank
from .morphism import AlgebraMorphism


@dataclass
class OreData:
    base: GradedAlgebra
    sigma: Sequence[FreePoly]
    delta: Sequence[FreePoly]
    n: int
    var: str = "t"


class _Delta:
    """``delta`` on normal words of ``R`` as coordinate vectors."""

    def __init__(self, r: GradedAlgebra, sigma: AlgebraMorphism, gen_vecs: list, n: int):
        self.r = r
        self.sigma = sigma
        self.gen_vecs = gen_vecs
        self.n = n
        self._cache: dict[Word, list] = {(): r.zero_vector(n)}

    def word(self, w: Word) -> list:
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        r = self.r
        head, last = w[:-1], w[-1]
        dh = r.free.degree(head)
        wl = r.weights[last]
        # delta(head * x) = sigma(head) delta(x) + delta(head) x
        left = r.product(self.sigma.apply_word(head), dh, self.gen_vecs[last], wl + self.n)
        right = r.product(self.word(head), dh + self.n, r.word_vector((last,)), wl)
        v = [a + b for a, b in zip(left, right)]
        self._cache[w] = v
        return v

    def poly(self, f: FreePoly) -> list:
        d = f.degree()
        out = self.r.zero_vector(d + self.n)
        for w, c in f.terms.items():
            for j, e in enumerate(self.word(w)):
                if e:
                    out[j] += c * e
        return out


def check_ore_data(o: OreData, D: int | None = None) -> AlgebraMorphism:
    """Validate ``sigma`` and ``delta``; return ``sigma`` as a morphism."""
    r = o.base
    D = r.D if D is None else D
    if o.n < 1:
        raise NotADerivation(f"deg t = {o.n} must be positive")
    try:
        sigma = AlgebraMorphism(r, r, list(o.sigma), name="sigma")
    except NotAMorphism as exc:
        raise NotAnAutomorphism(str(exc)) from None
    for d in range(min(D, r.D) + 1):
        if rank(sigma.matrix(d)) != r.dim(d):
            raise NotAnAutomorphism(f"sigma is not invertible in degree {d}")
    if len(o.delta) != r.ngens:
        raise NotADerivation(f"{len(o.delta)} delta images for {r.ngens} generators")
    gen_vecs = []
    for k, img in enumerate(o.delta):
        want = r.weights[k] + o.n
        if not isinstance(img, FreePoly):
            img = r.free.one() * img
        if img.terms and img.degree() != want:
            raise NotADerivation(
                f"delta({r.names[k]}) has degree {img.degree()}, expected {want}"
            )
        if want > r.D:
            raise DegreeAboveBound(f"delta({r.names[k]}) lives in degree {want} > D={r.D}")
        gen_vecs.append(r.vector(img, want)[1])
    dl = _Delta(r, sigma, gen_vecs, o.n)
    for rel in r.presentation.relations:
        if rel.degree() + o.n > r.D:
            raise DegreeAboveBound(f"relation {rel} needs degree {rel.degree() + o.n} to check")
        v = dl.poly(rel)
        if any(v):
            raise NotADerivation(
                f"delta({rel}) = {r.format_element(v, rel.degree() + o.n)} is not zero"
            )
    return sigma


def ore_presentation(o: OreData) -> Presentation:
    r = o.base
    gens = list(r.presentation.generators) + [GeneratorInfo(o.var, o.n)]
    # t is the last letter, so the words t*x lead their relations (PBW form)
    pres_free = Presentation(r.field, gens).free
    lift = lambda f: FreePoly(pres_free, f.terms)  # noqa: E731
    t = pres_free.gen(o.var)
    rels = [lift(p) for p in r.presentation.relations]
    for k in range(r.ngens):
        x = pres_free.gen(k)
        rel = t * x - lift(o.sigma[k]) * t - lift(o.delta[k])
        rels.append(rel)
    return Presentation(r.field, gens, rels)


def ore_hilbert(hr: Sequence[int], n: int, D: int) -> list[int]:
    """``h_S(i) = sum_k h_R(i - k n)``."""
    return [sum(hr[i - k * n] for k in range(i // n + 1)) for i in range(D + 1)]


def ore_extension(o: OreData, D: int, name: str | None = None) -> GradedAlgebra:
    """Presentation of ``R[t; sigma, delta]`` completed through degree ``D``.

    The Hilbert function is checked against the free ``R``-basis ``1, t, t^2, ...``.
    """
    if D > o.base.D:
        raise DegreeAboveBound(f"base algebra only certified to {o.base.D}")
    check_ore_data(o, D)
    s = GradedAlgebra(ore_presentation(o), D, name=name or f"{o.base.name or 'R'}[{o.var}]")
    want = ore_hilbert(o.base.hilbert(D), o.n, D)
    if s.hilbert(D) != want:
        raise NotADerivation(f"Hilbert function {s.hilbert(D)} differs from {want}")
    return s


def random_inner_delta(r: GradedAlgebra, sigma: Sequence[FreePoly], n: int,
                       rng: random.Random, bound: int = 3) -> list[FreePoly]:
    """``delta(x) = z x - sigma(x) z`` for a random ``z`` in ``R_n``: always valid."""
    f = r.field
    z = r.poly([f.random(rng, bound) for _ in range(r.dim(n))], n)
    out = []
    for k in range(r.ngens):
        x = r.free.gen(k)
        raw = z * x - sigma[k] * z
        d = r.weights[k] + n
        out.append(r.poly(r.vector(raw, d)[1], d))
    return out


def diagonal_sigma(r: GradedAlgebra, scalars: Sequence) -> list[FreePoly]:
    return [r.free.gen(k) * c for k, c in enumerate(scalars)]
