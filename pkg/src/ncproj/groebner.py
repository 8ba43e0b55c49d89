"""Truncated two-sided Gröbner bases for homogeneous ideals of a free algebra.

Completion runs degree by degree.  In degree ``d`` the pending candidates
(input relations and overlap S-elements of degree ``d``) are reduced by the
basis found so far, row reduced against each other, and the survivors join
the basis; their overlaps are queued in higher degrees.  Because every
element is homogeneous, stopping after degree ``D`` leaves a basis that is
exact for all computations in degrees ``<= D``.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Sequence

from .errors import DegreeAboveBound
from .free import FreeAlgebra, FreePoly, Presentation, Word
from .linalg import Matrix, _rref


class TruncatedGB:
    """Monic, inter-reduced Gröbner basis elements of degree at most ``bound``.

    Also usable while it is being built: :class:`GBBuilder` mutates one of
    these degree by degree.
    """

    def __init__(self, free: FreeAlgebra, bound: int):
        self.free = free
        self.bound = bound
        self.elements: list[FreePoly] = []
        self.processed_degree = 0
        self._leads: dict[Word, FreePoly] = {}
        self._lengths: list[int] = []
        # normal forms of words, valid for degrees <= processed_degree
        self._cache: dict[Word, dict] = {}

    @property
    def leading_words(self) -> list[Word]:
        return [g.leading_word() for g in self.elements]

    def _add(self, g: FreePoly) -> None:
        lw = g.leading_word()
        self.elements.append(g)
        self._leads[lw] = g
        if len(lw) not in self._lengths:
            self._lengths.append(len(lw))
            self._lengths.sort()

    def find_divisor(self, word: Word):
        """Leftmost, shortest occurrence of a leading word inside ``word``."""
        leads = self._leads
        n = len(word)
        for i in range(n):
            for L in self._lengths:
                if i + L > n:
                    break
                g = leads.get(word[i:i + L])
                if g is not None:
                    return i, L, g
        return None

    def has_lead_suffix(self, word: Word) -> bool:
        leads = self._leads
        for L in self._lengths:
            if L > len(word):
                break
            if word[len(word) - L:] in leads:
                return True
        return False

    def is_normal(self, word: Word) -> bool:
        return self.find_divisor(word) is None

    def reduce_word(self, word: Word, cache: dict | None = None) -> dict:
        """Normal form of a single word as ``{normal word: coeff}``."""
        if cache is None:
            cache = self._cache
        hit = cache.get(word)
        if hit is not None:
            return hit
        one = self.free.field.one
        stack = [word]
        while stack:
            u = stack[-1]
            if u in cache:
                stack.pop()
                continue
            split = self.find_divisor(u)
            if split is None:
                cache[u] = {u: one}
                stack.pop()
                continue
            i, L, g = split
            a, b = u[:i], u[i + L:]
            lw = u[i:i + L]
            deps = [(a + w + b, -c) for w, c in g.terms.items() if w != lw]
            missing = [v for v, _ in deps if v not in cache]
            if missing:
                stack.extend(missing)
                continue
            acc: dict = {}
            for v, c in deps:
                for w, e in cache[v].items():
                    acc[w] = acc.get(w, 0) + c * e
            cache[u] = {w: e for w, e in acc.items() if e}
            stack.pop()
        return cache[word]

    def reduce_terms(self, terms: dict, cache: dict | None = None) -> dict:
        acc: dict = {}
        for w, c in terms.items():
            for v, e in self.reduce_word(w, cache).items():
                acc[v] = acc.get(v, 0) + c * e
        return {w: c for w, c in acc.items() if c}

    def normal_form(self, f: FreePoly) -> FreePoly:
        for w in f.terms:
            if self.free.degree(w) > self.processed_degree:
                raise DegreeAboveBound(
                    f"degree {self.free.degree(w)} exceeds certified bound {self.processed_degree}"
                )
        return FreePoly(self.free, self.reduce_terms(f.terms))

    def __repr__(self):
        return f"TruncatedGB({len(self.elements)} elements, D={self.processed_degree})"


def _echelon_same_degree(free: FreeAlgebra, polys: Sequence[dict]) -> list[FreePoly]:
    """Monic rref of same-degree polynomials; columns in decreasing term order."""
    polys = [p for p in polys if p]
    if not polys:
        return []
    words = sorted({w for p in polys for w in p}, key=free.sort_key, reverse=True)
    col = {w: j for j, w in enumerate(words)}
    z = free.field.zero
    rows = []
    for p in polys:
        r = [z] * len(words)
        for w, c in p.items():
            r[col[w]] = c
        rows.append(r)
    red, _ = _rref(rows, len(words))
    return [FreePoly(free, {words[j]: c for j, c in enumerate(r) if c}) for r in red]


def _overlaps(g1: FreePoly, g2: FreePoly):
    """S-elements ``g1*c - a*g2`` for proper overlaps ``lm(g1) = a b``, ``lm(g2) = b c``."""
    u, v = g1.leading_word(), g2.leading_word()
    free = g1.parent
    for k in range(1, min(len(u), len(v))):
        if u[len(u) - k:] == v[:k]:
            a = free.monomial(u[:len(u) - k])
            c = free.monomial(v[k:])
            yield g1 * c - a * g2


class GBBuilder:
    """Incremental degree-by-degree completion.

    ``step()`` finishes one more degree.  Between steps, :meth:`add_in_current_degree`
    may add elements of the degree just finished (used when relations are
    discovered on the fly, e.g. for Veronese subalgebras).
    """

    def __init__(self, free: FreeAlgebra, bound: int, relations: Iterable[FreePoly] = ()):
        self.gb = TruncatedGB(free, bound)
        self.pending: dict[int, list[FreePoly]] = defaultdict(list)
        self.input_degrees: list[int] = []
        for r in relations:
            self.add_relation(r)

    @property
    def free(self) -> FreeAlgebra:
        return self.gb.free

    @property
    def degree(self) -> int:
        return self.gb.processed_degree

    def add_relation(self, r: FreePoly) -> None:
        d = r.degree()
        if d <= self.degree:
            raise ValueError(f"relation of degree {d} added after degree {self.degree} was closed")
        if d <= self.gb.bound:
            self.pending[d].append(r)

    def _insert(self, new: list[FreePoly]) -> None:
        gb = self.gb
        free = self.free
        bound = gb.bound
        for g in new:
            gb._add(g)
            for h in list(gb.elements):
                pairs = [(g, h)] if h is g else [(g, h), (h, g)]
                for a, b in pairs:
                    for s in _overlaps(a, b):
                        if s:
                            d = free.degree(next(iter(s.terms)))
                            if d <= bound:
                                self.pending[d].append(s)

    def step(self) -> list[FreePoly]:
        gb = self.gb
        d = gb.processed_degree + 1
        if d > gb.bound:
            raise DegreeAboveBound(f"completion already reached bound {gb.bound}")
        cands = self.pending.pop(d, [])
        scratch: dict = {}
        reduced = [gb.reduce_terms(c.terms, scratch) for c in cands]
        new = _echelon_same_degree(self.free, reduced)
        self._insert(new)
        gb.processed_degree = d
        return new

    def add_in_current_degree(self, polys: Iterable[FreePoly]) -> list[FreePoly]:
        gb = self.gb
        d = gb.processed_degree
        scratch: dict = {}
        reduced = [gb.reduce_terms(p.terms, scratch) for p in polys]
        new = _echelon_same_degree(self.free, reduced)
        if new:
            self._insert(new)
            for w in [w for w in gb._cache if self.free.degree(w) >= d]:
                del gb._cache[w]
        return new

    def run(self, upto: int | None = None) -> TruncatedGB:
        target = self.gb.bound if upto is None else upto
        while self.degree < target:
            self.step()
        return self.gb


def complete(p: Presentation, D: int) -> TruncatedGB:
    """Truncated completion of the relations of ``p`` through degree ``D``."""
    if D < 0:
        raise ValueError("bound must be nonnegative")
    return GBBuilder(p.free, D, p.relations).run()


def normal_form(f: FreePoly, gb: TruncatedGB) -> FreePoly:
    return gb.normal_form(f)


class GradedAlgebra:
    """``A = F / (relations)`` realized through degree ``D``.

    Elements of ``A_i`` are coordinate vectors against :meth:`basis` ``(i)``,
    the normal words of degree ``i`` sorted by the term order.
    """

    def __init__(self, presentation: Presentation, D: int, gb: TruncatedGB | None = None,
                 name: str | None = None):
        if gb is None:
            gb = complete(presentation, D)
        if gb.processed_degree < D:
            raise DegreeAboveBound(f"Gröbner basis only certified to {gb.processed_degree}")
        self.presentation = presentation
        self.gb = gb
        self.D = D
        self.name = name
        free = presentation.free
        self.free = free
        self.field = free.field
        self.weights = free.weights
        self.names = free.names
        self._basis: list[tuple[Word, ...]] = [((),)]
        for d in range(1, D + 1):
            level = []
            for k, w in enumerate(free.weights):
                if w <= d:
                    for u in self._basis[d - w]:
                        v = u + (k,)
                        if not gb.has_lead_suffix(v):
                            level.append(v)
            level.sort(key=free.sort_key)
            self._basis.append(tuple(level))
        self._index = [{w: j for j, w in enumerate(b)} for b in self._basis]
        self._rmul: dict = {}
        self._lmul: dict = {}

    # -- basic data ---------------------------------------------------------
    @property
    def ngens(self) -> int:
        return len(self.weights)

    @property
    def max_weight(self) -> int:
        return max(self.weights, default=1)

    def _check(self, i: int) -> None:
        if i > self.D:
            raise DegreeAboveBound(f"degree {i} exceeds certified bound {self.D}")

    def basis(self, i: int) -> tuple[Word, ...]:
        if i < 0:
            return ()
        self._check(i)
        return self._basis[i]

    def dim(self, i: int) -> int:
        return len(self.basis(i))

    def hilbert(self, upto: int | None = None) -> list[int]:
        upto = self.D if upto is None else upto
        self._check(upto)
        return [len(self._basis[i]) for i in range(upto + 1)]

    def index(self, i: int) -> dict:
        self._check(i)
        return self._index[i] if i >= 0 else {}

    def zero_vector(self, i: int) -> list:
        return [self.field.zero] * self.dim(i)

    # -- elements -------------------------------------------------------------
    def nf_terms(self, terms: dict) -> dict:
        return self.gb.reduce_terms(terms)

    def word_vector(self, word: Word) -> list:
        d = self.free.degree(word)
        v = self.zero_vector(d)
        idx = self._index[d]
        for w, c in self.gb.reduce_word(word).items():
            v[idx[w]] += c
        return v

    def vector(self, f: FreePoly, degree: int | None = None) -> tuple[int, list]:
        """(degree, coordinates) of a homogeneous element."""
        if f.is_zero():
            if degree is None:
                raise ValueError("degree of the zero polynomial is ambiguous")
            return degree, self.zero_vector(degree)
        d = f.degree()
        self._check(d)
        v = self.zero_vector(d)
        idx = self._index[d]
        for w, c in self.gb.reduce_terms(f.terms).items():
            v[idx[w]] += c
        return d, v

    def poly(self, vec: Sequence, degree: int) -> FreePoly:
        return FreePoly(self.free, {w: c for w, c in zip(self.basis(degree), vec) if c})

    def format_element(self, vec: Sequence, degree: int) -> str:
        return str(self.poly(vec, degree))

    def gen_vector(self, k: int) -> list:
        return self.word_vector((k,))

    def product(self, a: Sequence, da: int, b: Sequence, db: int) -> list:
        self._check(da + db)
        out = self.zero_vector(da + db)
        idx = self._index[da + db]
        ba, bb = self.basis(da), self.basis(db)
        for u, x in zip(ba, a):
            if not x:
                continue
            for v, y in zip(bb, b):
                if not y:
                    continue
                for w, c in self.gb.reduce_word(u + v).items():
                    out[idx[w]] += x * y * c
        return out

    # -- multiplication matrices (rows: basis of A_e) ------------------------
    def right_mult(self, k: int, e: int) -> Matrix:
        """Matrix of ``v -> v * x_k`` from ``A_e`` to ``A_{e+w_k}``."""
        key = (k, e)
        m = self._rmul.get(key)
        if m is None:
            t = e + self.weights[k]
            rows = [self.word_vector(u + (k,)) for u in self.basis(e)]
            m = Matrix._trusted(self.field, rows, self.dim(t))
            self._rmul[key] = m
        return m

    def left_mult(self, k: int, e: int) -> Matrix:
        """Matrix of ``v -> x_k * v`` from ``A_e`` to ``A_{e+w_k}``."""
        key = (k, e)
        m = self._lmul.get(key)
        if m is None:
            t = e + self.weights[k]
            rows = [self.word_vector((k,) + u) for u in self.basis(e)]
            m = Matrix._trusted(self.field, rows, self.dim(t))
            self._lmul[key] = m
        return m

    def left_mult_elem(self, a: Sequence, da: int, e: int) -> Matrix:
        """Matrix of ``v -> a * v`` from ``A_e`` to ``A_{e+da}``."""
        rows = []
        for j in range(self.dim(e)):
            v = self.zero_vector(e)
            v[j] = self.field.one
            rows.append(self.product(a, da, v, e))
        return Matrix._trusted(self.field, rows, self.dim(e + da))

    def right_mult_elem(self, a: Sequence, da: int, e: int) -> Matrix:
        """Matrix of ``v -> v * a`` from ``A_e`` to ``A_{e+da}``."""
        rows = []
        for j in range(self.dim(e)):
            v = self.zero_vector(e)
            v[j] = self.field.one
            rows.append(self.product(v, e, a, da))
        return Matrix._trusted(self.field, rows, self.dim(e + da))

    def is_generated_in_degree_one(self, upto: int | None = None) -> bool:
        """Whether ``A_1`` generates ``A_i`` for ``i <= upto`` (default ``D``)."""
        return _degree_one_spans(self, self.D if upto is None else upto)

    def __repr__(self):
        label = self.name or repr(self.presentation.free)
        return f"GradedAlgebra({label}, D={self.D})"


def _degree_one_spans(a: GradedAlgebra, upto: int) -> bool:
    from .linalg import RowSpace

    span = [None, RowSpace.full(a.field, a.dim(1))]
    for i in range(2, upto + 1):
        vecs = []
        for b in span[i - 1].basis:
            for k, w in enumerate(a.weights):
                if w == 1:
                    vecs.append(a.right_mult(k, i - 1).apply(b))
        sp = RowSpace(a.field, a.dim(i), vecs)
        if sp.dim != a.dim(i):
            return False
        span.append(sp)
    return True


def monomial_basis(a: GradedAlgebra, i: int) -> tuple[Word, ...]:
    return a.basis(i)


def hilbert_function(a: GradedAlgebra, D: int | None = None) -> list[int]:
    return a.hilbert(D)


def algebra(presentation: Presentation, D: int, name: str | None = None) -> GradedAlgebra:
    return GradedAlgebra(presentation, D, name=name)
