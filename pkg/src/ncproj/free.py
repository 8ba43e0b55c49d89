"""Weighted free associative algebras and homogeneous noncommutative polynomials.

Words are tuples of generator indices.  The term order is fixed: weighted
degree first, then left-lexicographic comparison using the declaration order
of the generators (earlier generator = smaller letter).  Two words of equal
weighted degree are never proper prefixes of one another, so this order is
compatible with multiplication on both sides.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import (
    ContextMismatch,
    DuplicateGenerator,
    InhomogeneousRelation,
    PresentationError,
    ZeroWeight,
)
from .linalg import Field

Word = tuple


@dataclass(frozen=True)
class GeneratorInfo:
    name: str
    weight: int


class FreeAlgebra:
    """The free algebra ``k<x_1, ..., x_s>`` with positive generator weights.

    Words are ordered by weighted degree, then lexicographically on generator
    indices (weighted deglex).  A heavy last generator ``t`` therefore leads
    ``t*x`` over words such as ``x*x*x``.
    """

    def __init__(self, field: Field, generators: Iterable[GeneratorInfo]):
        gens = tuple(generators)
        seen = set()
        for g in gens:
            if g.name in seen:
                raise DuplicateGenerator(f"generator {g.name!r} declared twice")
            seen.add(g.name)
            if g.weight < 1:
                raise ZeroWeight(f"generator {g.name!r} has weight {g.weight}; weights must be >= 1")
        self.field = field
        self.generators = gens
        self.names = tuple(g.name for g in gens)
        self.weights = tuple(g.weight for g in gens)
        self._index = {g.name: i for i, g in enumerate(gens)}
        self._key = (field, gens)

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        return self._index[name]

    def degree(self, word: Word) -> int:
        w = self.weights
        return sum(w[i] for i in word)

    def sort_key(self, word: Word) -> tuple:
        return (self.degree(word), word)

    def words(self, degree: int) -> list[Word]:
        """All words of the given weighted degree, in increasing term order."""
        table: list[list[Word]] = [[()]]
        for d in range(1, degree + 1):
            level = []
            for i, w in enumerate(self.weights):
                if w <= d:
                    level.extend(u + (i,) for u in table[d - w])
            table.append(level)
        out = table[degree] if degree >= 0 else []
        return sorted(out, key=self.sort_key)

    def gen(self, name_or_index) -> "FreePoly":
        i = name_or_index if isinstance(name_or_index, int) else self._index[name_or_index]
        return FreePoly(self, {(i,): self.field.one})

    def gens(self) -> list["FreePoly"]:
        return [self.gen(i) for i in range(self.ngens)]

    def one(self) -> "FreePoly":
        return FreePoly(self, {(): self.field.one})

    def zero(self) -> "FreePoly":
        return FreePoly(self, {})

    def monomial(self, word: Word, coeff=1) -> "FreePoly":
        return FreePoly(self, {tuple(word): self.field(coeff)})

    def word_str(self, word: Word) -> str:
        return "*".join(self.names[i] for i in word) if word else "1"

    def __eq__(self, other):
        return isinstance(other, FreeAlgebra) and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.weight}" for g in self.generators)
        return f"FreeAlgebra({self.field.tag}; {gens})"


def term_compare(free: FreeAlgebra, u: Word, v: Word) -> int:
    """-1, 0 or 1 according to the fixed term order."""
    ku, kv = free.sort_key(u), free.sort_key(v)
    return (ku > kv) - (ku < kv)


class FreePoly:
    """Element of a free algebra: a finite map from words to nonzero scalars."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: FreeAlgebra, terms: Mapping[Word, object] | None = None):
        self.parent = parent
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    def _coerce(self, other) -> "FreePoly":
        if isinstance(other, FreePoly):
            if other.parent != self.parent:
                raise ContextMismatch("polynomials over different free algebras")
            return other
        return FreePoly(self.parent, {(): self.parent.field(other)})

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t.get(w, 0) + c
        return FreePoly(self.parent, t)

    __radd__ = __add__

    def __neg__(self):
        return FreePoly(self.parent, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, FreePoly):
            c = self.parent.field(other)
            return FreePoly(self.parent, {w: c * a for w, a in self.terms.items()})
        other = self._coerce(other)
        t: dict = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                t[w] = t.get(w, 0) + a * b
        return FreePoly(self.parent, t)

    def __rmul__(self, other):
        c = self.parent.field(other)
        return FreePoly(self.parent, {w: c * a for w, a in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, FreePoly):
            return self.parent == other.parent and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {self.parent.degree(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Weighted degree of a homogeneous nonzero polynomial."""
        ds = self.degrees()
        if len(ds) != 1:
            raise InhomogeneousRelation(f"{self} is not homogeneous")
        return next(iter(ds))

    def leading_word(self) -> Word:
        return max(self.terms, key=self.parent.sort_key)

    def leading_coeff(self):
        return self.terms[self.leading_word()]

    def monic(self) -> "FreePoly":
        return self * (1 / self.leading_coeff())

    def sorted_terms(self) -> list[tuple[Word, object]]:
        """Terms in decreasing term order."""
        key = self.parent.sort_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[Word, object]]:
        return iter(self.sorted_terms())

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"FreePoly({format_poly(self)})"


def format_coeff(c) -> str:
    return str(c)


def format_poly(p: FreePoly) -> str:
    """DSL text of a polynomial; parsing it back returns an equal polynomial."""
    if not p.terms:
        return "0"
    parts = []
    one = p.parent.field.one
    for i, (w, c) in enumerate(p.sorted_terms()):
        neg = False
        if p.parent.field.characteristic == 0 and c < 0:
            neg, c = True, -c
        word = p.parent.word_str(w) if w else ""
        if c == one and word:
            body = word
        elif word:
            body = f"{format_coeff(c)}*{word}"
        else:
            body = format_coeff(c)
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


class Presentation:
    """Generators with weights plus homogeneous relations over a field."""

    def __init__(self, field: Field, generators: Iterable[GeneratorInfo],
                 relations: Iterable[FreePoly] = ()):
        self.free = FreeAlgebra(field, generators)
        rels = []
        for r in relations:
            if r.parent != self.free:
                # accept relations written over an equal generator table
                r = FreePoly(self.free, r.terms)
            if r.is_zero():
                raise PresentationError("zero relation")
            if not r.is_homogeneous():
                raise InhomogeneousRelation(f"relation {r} is not homogeneous")
            if r.degree() < 1:
                raise PresentationError(f"relation {r} has degree 0")
            rels.append(r)
        self.relations = tuple(rels)

    @property
    def field(self) -> Field:
        return self.free.field

    @property
    def generators(self) -> tuple[GeneratorInfo, ...]:
        return self.free.generators

    def max_relation_degree(self) -> int:
        return max((r.degree() for r in self.relations), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, Presentation)
            and self.free == other.free
            and self.relations == other.relations
        )

    def __hash__(self):
        return hash((self.free, self.relations))

    def __repr__(self):
        return f"Presentation({self.free!r}, {len(self.relations)} relations)"


def commutators(free: FreeAlgebra, names: Iterable[str] | None = None) -> list[FreePoly]:
    """``y*x - x*y`` for every pair of (listed) generators, x declared first."""
    idx = [free.index(n) for n in names] if names is not None else list(range(free.ngens))
    out = []
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            x, y = free.gen(idx[a]), free.gen(idx[b])
            out.append(y * x - x * y)
    return out
