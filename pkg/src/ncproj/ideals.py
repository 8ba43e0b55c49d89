"""Homogeneous ideals held degree by degree, and the ring-level checks built on them.

An ideal is a family of subspaces ``I_e`` of ``A_e`` (rref row spaces against
the normal-word basis) for ``0 <= e <= hi``.  Right and two-sided ideals are
both stored this way; sidedness is a tag plus a checkable property.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .errors import (
    ContextMismatch,
    JActsNonzero,
    WindowExceeded,
    WindowInsufficient,
)
from .free import FreePoly, Presentation
from .groebner import GradedAlgebra
from .linalg import Matrix, RowSpace
from .modules import GradedModule, quotient, submodule
from .morphism import AlgebraMorphism

RIGHT = "right"
TWO_SIDED = "two-sided"


class GradedIdeal:
    """Homogeneous ideal of ``A`` with components certified on ``[0, hi]``."""

    def __init__(self, algebra: GradedAlgebra, components: dict[int, RowSpace], hi: int,
                 sided: str = RIGHT, generators: Sequence[FreePoly] = (),
                 name: str | None = None, exact_upto: int | None = None):
        self.algebra = algebra
        self._comp = dict(components)
        self.hi = hi
        self.sided = sided
        self.generators = list(generators)
        self.name = name
        self.exact_upto = hi if exact_upto is None else exact_upto

    # -- construction ----------------------------------------------------------
    @classmethod
    def generated_by(cls, a: GradedAlgebra, gens: Iterable, sided: str = TWO_SIDED,
                     hi: int | None = None, name: str | None = None) -> "GradedIdeal":
        """Ideal generated by homogeneous elements (FreePolys or ``(deg, vector)``)."""
        hi = a.D if hi is None else hi
        seeds: dict[int, list] = {}
        polys = []
        for g in gens:
            if isinstance(g, FreePoly):
                if g.is_zero():
                    continue
                polys.append(g)
                d, v = a.vector(g)
            else:
                d, v = g
            if d <= hi and any(v):
                seeds.setdefault(d, []).append(list(v))
        return cls(a, closure(a, seeds, hi, sided), hi, sided, polys, name)

    @classmethod
    def from_spaces(cls, a: GradedAlgebra, seeds: dict[int, Sequence[Sequence]],
                    sided: str = RIGHT, hi: int | None = None,
                    name: str | None = None) -> "GradedIdeal":
        hi = a.D if hi is None else hi
        return cls(a, closure(a, {d: list(v) for d, v in seeds.items()}, hi, sided), hi, sided,
                   name=name)

    @classmethod
    def zero(cls, a: GradedAlgebra, hi: int | None = None) -> "GradedIdeal":
        hi = a.D if hi is None else hi
        return cls(a, {e: RowSpace(a.field, a.dim(e)) for e in range(hi + 1)}, hi, TWO_SIDED,
                   name="0")

    @classmethod
    def whole(cls, a: GradedAlgebra, hi: int | None = None) -> "GradedIdeal":
        hi = a.D if hi is None else hi
        return cls(a, {e: RowSpace.full(a.field, a.dim(e)) for e in range(hi + 1)}, hi,
                   TWO_SIDED, [a.free.one()], name="A")

    @classmethod
    def augmentation(cls, a: GradedAlgebra, hi: int | None = None) -> "GradedIdeal":
        hi = a.D if hi is None else hi
        comps = {e: RowSpace.full(a.field, a.dim(e)) for e in range(1, hi + 1)}
        comps[0] = RowSpace(a.field, 1)
        return cls(a, comps, hi, TWO_SIDED, a.free.gens(), name="m")

    # -- access ------------------------------------------------------------------
    @property
    def field(self):
        return self.algebra.field

    def component(self, e: int) -> RowSpace:
        if e < 0:
            return RowSpace(self.field, 0)
        if e > self.hi:
            raise WindowExceeded("ideal component beyond certified window", e)
        return self._comp[e]

    def dim(self, e: int) -> int:
        return self.component(e).dim

    def dims(self, upto: int | None = None) -> list[int]:
        upto = self.hi if upto is None else upto
        return [self.dim(e) for e in range(upto + 1)]

    def codims(self, upto: int | None = None) -> list[int]:
        upto = self.hi if upto is None else upto
        return [self.component(e).codim for e in range(upto + 1)]

    def contains(self, vec: Sequence, e: int) -> bool:
        return self.component(e).contains(vec)

    def contains_ideal(self, other: "GradedIdeal", upto: int | None = None) -> bool:
        upto = min(self.hi, other.hi) if upto is None else upto
        return all(self.component(e).contains_space(other.component(e)) for e in range(upto + 1))

    def is_zero(self, upto: int | None = None) -> bool:
        return not any(self.dims(upto))

    def intersect(self, other: "GradedIdeal") -> "GradedIdeal":
        hi = min(self.hi, other.hi)
        comps = {e: self.component(e).intersect(other.component(e)) for e in range(hi + 1)}
        sided = TWO_SIDED if self.sided == other.sided == TWO_SIDED else RIGHT
        return GradedIdeal(self.algebra, comps, hi, sided)

    def __eq__(self, other):
        if not isinstance(other, GradedIdeal) or other.algebra is not self.algebra:
            return NotImplemented
        hi = min(self.hi, other.hi)
        return all(self.component(e) == other.component(e) for e in range(hi + 1))

    def minimal_generators(self, sided: str | None = None) -> dict[int, list]:
        """Degree-wise complements of the part generated from lower degrees."""
        sided = self.sided if sided is None else sided
        a = self.algebra
        out = {}
        for e in range(self.hi + 1):
            lower = _products_from_below(a, self._comp, e, sided)
            comp = self.component(e)
            span = RowSpace(self.field, a.dim(e), lower)
            new = []
            for b in comp.basis:
                if not span.contains(b):
                    new.append(list(b))
                    span = span.sum(RowSpace(self.field, a.dim(e), [b]))
            if new:
                out[e] = new
        return out

    def generator_polys(self, sided: str | None = None) -> list[FreePoly]:
        a = self.algebra
        return [a.poly(v, e) for e, vs in self.minimal_generators(sided).items() for v in vs]

    def describe(self, sided: str | None = None) -> str:
        """``(g1, g2, ...)`` from minimal generators; ``A`` when ``1`` is inside."""
        if self.dim(0):
            return "A"
        gens = self.generator_polys(sided)
        if not gens:
            return "0"
        return "(" + ", ".join(str(g) for g in gens) + ")"

    def __repr__(self):
        label = self.name or "I"
        return f"GradedIdeal({label}, {self.sided}, dims={self.dims()})"


def _products_from_below(a: GradedAlgebra, comps: dict[int, RowSpace], e: int,
                         sided: str) -> list:
    vecs = []
    for k, w in enumerate(a.weights):
        s = e - w
        if s < 0 or s not in comps:
            continue
        R = a.right_mult(k, s)
        vecs.extend(R.apply(b) for b in comps[s].basis)
        if sided == TWO_SIDED:
            L = a.left_mult(k, s)
            vecs.extend(L.apply(b) for b in comps[s].basis)
    return vecs


def closure(a: GradedAlgebra, seeds: dict[int, list], hi: int, sided: str) -> dict[int, RowSpace]:
    """Smallest right (or two-sided) ideal containing the seed vectors, degree-wise."""
    if hi > a.D:
        raise WindowExceeded(f"ideal window {hi} beyond algebra bound {a.D}", hi)
    comps: dict[int, RowSpace] = {}
    for e in range(hi + 1):
        vecs = list(seeds.get(e, [])) + _products_from_below(a, comps, e, sided)
        comps[e] = RowSpace(a.field, a.dim(e), vecs)
    return comps


def ideal_components(i: GradedIdeal, e: int) -> list[tuple]:
    return list(i.component(e).basis)


# ---------------------------------------------------------------------------
# two-sidedness


@dataclass
class Witness:
    """``x_k * v`` (or ``v * x_k``) leaves the ideal: ``v`` lies in degree ``degree``."""

    generator: str
    degree: int
    element: str
    product: str
    side: str = "left"

    def __str__(self):
        if self.side == "left":
            return f"{self.generator}*({self.element}) = {self.product}"
        return f"({self.element})*{self.generator} = {self.product}"


def is_twosided(k: GradedIdeal, D: int | None = None) -> tuple[bool, Witness | None]:
    """Whether ``x * K_e`` stays in ``K`` for every generator ``x`` and ``e + w <= D``."""
    a = k.algebra
    D = k.hi if D is None else D
    if D > k.hi:
        raise WindowExceeded("two-sidedness check beyond ideal window", D)
    for e in range(D + 1):
        for j, w in enumerate(a.weights):
            if e + w > D:
                continue
            for side, M in (("left", a.left_mult(j, e)), ("right", a.right_mult(j, e))):
                tgt = k.component(e + w)
                for b in k.component(e).basis:
                    img = M.apply(b)
                    if not tgt.contains(img):
                        return False, Witness(a.names[j], e, a.format_element(b, e),
                                              a.format_element(img, e + w), side)
    return True, None


@dataclass
class LargestTwoSided:
    ideal: GradedIdeal
    stable_upto: int


def _largest_inside(k: GradedIdeal, top: int, left_only: bool) -> dict[int, RowSpace]:
    a = k.algebra
    out: dict[int, RowSpace] = {}
    for e in range(top, -1, -1):
        S = k.component(e)
        for j, w in enumerate(a.weights):
            if e + w > top:
                continue
            S = S.preimage(a.left_mult(j, e), out[e + w])
            if not left_only:
                S = S.preimage(a.right_mult(j, e), out[e + w])
        out[e] = S
    return out


def largest_twosided_inside(k: GradedIdeal, D: int | None = None) -> GradedIdeal:
    """Greatest two-sided ideal inside ``K`` as seen through degree ``D``.

    One top-down sweep suffices: ``S_e = {x in K_e : x_j x, x x_j in S_{e+w_j}}``
    only looks at higher degrees.  The result contains the true largest ideal.
    ``exact_upto`` is the last degree whose component no longer changes when
    the sweep starts ``max weight`` degrees lower (a stabilization heuristic).
    """
    a = k.algebra
    D = k.hi if D is None else D
    if D > k.hi:
        raise WindowExceeded("largest two-sided ideal beyond ideal window", D)
    left_only = k.sided == RIGHT and is_right_ideal(k, D)
    comps = _largest_inside(k, D, left_only)
    mw = a.max_weight
    stable = -1
    if D - mw >= 0:
        lower = _largest_inside(k, D - mw, left_only)
        for e in range(D - mw + 1):
            if lower[e] != comps[e]:
                break
            stable = e
    return GradedIdeal(a, comps, D, TWO_SIDED, name=f"largest two-sided in {k.name or 'K'}",
                       exact_upto=stable)


def is_right_ideal(k: GradedIdeal, D: int | None = None) -> bool:
    a = k.algebra
    D = k.hi if D is None else D
    for e in range(D + 1):
        for j, w in enumerate(a.weights):
            if e + w <= D:
                R = a.right_mult(j, e)
                tgt = k.component(e + w)
                if not all(tgt.contains(R.apply(b)) for b in k.component(e).basis):
                    return False
    return True


# ---------------------------------------------------------------------------
# ring maps


def image_ideal(phi: AlgebraMorphism, D: int | None = None) -> GradedIdeal:
    """The right ideal ``phi(m) B`` of the target."""
    b = phi.target
    D = b.D if D is None else D
    seeds: dict[int, list] = {}
    for k, w in enumerate(phi.source.weights):
        d = phi.scale * w
        if d <= D and any(phi._gen_vecs[k]):
            seeds.setdefault(d, []).append(phi._gen_vecs[k])
    return GradedIdeal(b, closure(b, seeds, D, RIGHT), D, RIGHT, name="phi(m)B")


def _power_of_augmentation(a: GradedAlgebra, n: int, D: int) -> dict[int, RowSpace]:
    """``m^n``: images of words with at least ``n`` letters, degree-wise."""
    f = a.field
    level = {e: RowSpace.full(f, a.dim(e)) for e in range(1, D + 1)}
    level[0] = RowSpace(f, 1)
    for _ in range(n - 1):
        nxt = {0: RowSpace(f, 1)}
        for e in range(1, D + 1):
            vecs = []
            for k, w in enumerate(a.weights):
                if e - w >= 0:
                    R = a.right_mult(k, e - w)
                    vecs.extend(R.apply(b) for b in level[e - w].basis)
            nxt[e] = RowSpace(f, a.dim(e), vecs)
        level = nxt
    return level


@dataclass
class AffineResult:
    n: int | None
    certified_upto: int
    witness: str | None = None
    witness_degree: int | None = None
    tested: list[int] = dc_field(default_factory=list)


def check_affine_hypothesis(phi: AlgebraMorphism, nmax: int, D: int | None = None) -> AffineResult:
    """Smallest ``n <= nmax`` with ``B phi(m)^n`` inside ``phi(m) B`` through degree ``D``."""
    b = phi.target
    D = b.D if D is None else D
    if D > b.D:
        raise WindowExceeded("affine check beyond target bound", D)
    s = phi.scale
    K = image_ideal(phi, D)
    top_src = D // s
    witness = None
    for n in range(1, nmax + 1):
        pw = _power_of_augmentation(phi.source, n, min(top_src, phi.source.D))
        seeds: dict[int, list] = {}
        for d, sp in pw.items():
            if d and s * d <= D:
                imgs = [phi.apply(v, d) for v in sp.basis]
                imgs = [v for v in imgs if any(v)]
                if imgs:
                    seeds[s * d] = imgs
        left = _left_closure(b, seeds, D)
        bad = None
        for e in range(D + 1):
            comp = K.component(e)
            for v in left[e].basis:
                if not comp.contains(v):
                    bad = (e, v)
                    break
            if bad:
                break
        if bad is None:
            return AffineResult(n, D, tested=list(range(1, n + 1)))
        witness = bad
    e, v = witness
    return AffineResult(None, D, b.format_element(v, e), e, list(range(1, nmax + 1)))


def _left_closure(a: GradedAlgebra, seeds: dict[int, list], D: int) -> dict[int, RowSpace]:
    comps: dict[int, RowSpace] = {}
    for e in range(D + 1):
        vecs = list(seeds.get(e, []))
        for k, w in enumerate(a.weights):
            if e - w >= 0:
                L = a.left_mult(k, e - w)
                vecs.extend(L.apply(x) for x in comps[e - w].basis)
        comps[e] = RowSpace(a.field, a.dim(e), vecs)
    return comps


@dataclass
class FiniteModuleReport:
    quotient_dims: list[int]
    vanishes_from: int | None
    finite: bool
    annihilator: GradedIdeal
    annihilator_quotient_dims: list[int]
    certified_upto: int


def finite_module_check(phi: AlgebraMorphism, D: int | None = None) -> FiniteModuleReport:
    """Dimensions of ``B / phi(m)B`` and of ``B / I`` for its right annihilator ``I``.

    The right annihilator of ``B/K`` for a right ideal ``K`` is the largest
    two-sided ideal inside ``K``.  Finiteness is claimed when the quotient
    vanishes on at least ``max weight`` consecutive top degrees of the window.
    """
    b = phi.target
    D = b.D if D is None else D
    K = image_ideal(phi, D)
    qd = K.codims(D)
    van = None
    for e in range(D, -1, -1):
        if qd[e]:
            break
        van = e
    finite = van is not None and D - van + 1 >= b.max_weight
    ann = largest_twosided_inside(K, D)
    return FiniteModuleReport(qd, van, finite, ann, ann.codims(D), D)


# ---------------------------------------------------------------------------
# closed immersions A -> A/J


def quotient_algebra(j: GradedIdeal, D: int | None = None, name: str | None = None) -> GradedAlgebra:
    """``A/J`` presented by the relations of ``A`` plus generators of ``J``."""
    a = j.algebra
    D = min(a.D, j.hi) if D is None else D
    gens = j.generators or j.generator_polys(TWO_SIDED)
    pres = Presentation(a.field, a.presentation.generators,
                        list(a.presentation.relations) + [g for g in gens if g.degree() <= D])
    return GradedAlgebra(pres, D, name=name or f"{a.name or 'A'}/J")


def quotient_map(a: GradedAlgebra, q: GradedAlgebra) -> AlgebraMorphism:
    return AlgebraMorphism(a, q, [q.free.gen(k) for k in range(a.ngens)], check=False,
                           name="quotient")


def _relabel(m: GradedModule, algebra: GradedAlgebra, name: str | None = None) -> GradedModule:
    """Same degree-wise data over an algebra with the same generator table."""
    return GradedModule(algebra, m.lo, m.hi, m._dims, m._act, name=name or m.name)


def _check_j_acts_zero(j: GradedIdeal, m: GradedModule) -> None:
    a = j.algebra
    gens = j.generators or j.generator_polys(TWO_SIDED)
    for g in gens:
        gg = FreePoly(m.algebra.free, g.terms)
        d = gg.degree()
        for e in range(m.lo, m.hi - d + 1):
            if m.dim(e) and not m.act_poly(e, gg).is_zero():
                raise JActsNonzero(f"{g} acts nonzero on degree {e}")


def quotient_inflate(j: GradedIdeal, m: GradedModule) -> GradedModule:
    """``i_*``: an ``A/J``-module viewed as an ``A``-module (``J`` acts as zero)."""
    a = j.algebra
    if m.algebra is not a and m.algebra.free.generators != a.free.generators:
        raise ContextMismatch("module algebra does not share generators with A")
    _check_j_acts_zero(j, m)
    if m.algebra is a:
        return m
    return _relabel(m, a, name=f"i_*{m.name}" if m.name else None)


def module_times_ideal(m: GradedModule, j: GradedIdeal) -> dict[int, RowSpace]:
    """``MJ`` degree-wise: ``M g`` for generators ``g`` of ``J``, then closed under ``A``."""
    a = m.algebra
    f = m.field
    gens = j.generators or j.generator_polys(TWO_SIDED)
    seeds: dict[int, list] = {}
    for g in gens:
        d = g.degree()
        for e in range(m.lo, m.hi - d + 1):
            if m.dim(e):
                seeds.setdefault(e + d, []).extend(m.act_poly(e, g).rows)
    out: dict[int, RowSpace] = {}
    for e in range(m.lo, m.hi + 1):
        vecs = list(seeds.get(e, []))
        for k, w in enumerate(a.weights):
            if e - w in out:
                A_ = m.action(k, e - w)
                vecs.extend(A_.apply(b) for b in out[e - w].basis)
        out[e] = RowSpace(f, m.dim(e), vecs)
    return out


def quotient_pullback(j: GradedIdeal, m: GradedModule, q: GradedAlgebra | None = None) -> GradedModule:
    """``i^* M = M / MJ`` as a module over ``A/J``."""
    q = quotient_algebra(j) if q is None else q
    mj = module_times_ideal(m, j)
    quo = quotient(m, mj)
    return _relabel(quo, q, name=f"i^*{m.name}" if m.name else None)


def torsion_submodule(j: GradedIdeal, m: GradedModule, q: GradedAlgebra | None = None) -> GradedModule:
    """``i^!``: the largest submodule of ``M`` killed by ``J``.

    ``T_e = {x in M_e : x g = 0 for generators g of J, x x_k in T_{e+w}}``,
    computed top-down from the window top.  The result is certified on
    ``[lo, hi - max deg g]``: every retained degree has seen each generator
    of ``J`` act inside the window.
    """
    q = quotient_algebra(j) if q is None else q
    a = m.algebra
    f = m.field
    gens = j.generators or j.generator_polys(TWO_SIDED)
    T: dict[int, RowSpace] = {}
    for e in range(m.hi, m.lo - 1, -1):
        S = RowSpace.full(f, m.dim(e))
        for g in gens:
            d = g.degree()
            if e + d <= m.hi:
                S = S.preimage(m.act_poly(e, g), RowSpace(f, m.dim(e + d)))
        for k, w in enumerate(a.weights):
            if e + w <= m.hi:
                S = S.preimage(m.action(k, e), T[e + w])
        T[e] = S
    top = m.hi - max((g.degree() for g in gens), default=0)
    if top < m.lo - 1:
        raise WindowInsufficient("window too short to test the ideal generators", m.hi)
    sub = submodule(m, T, hi=top)
    return _relabel(sub, q, name=f"i^!{m.name}" if m.name else None)
