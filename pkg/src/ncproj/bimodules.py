"""Bigraded bimodules, the graded tensor ``L (x)bar M`` and ``Hom_(M, N)``.

A bigraded ``A``-``B`` bimodule ``M = (+)_{p,q} pM_q`` is stored row by row:
row ``p`` is the graded right ``B``-module ``pM_*`` and a generator ``x`` of
``A`` of weight ``w`` acts on the left as a degree-preserving map
``pM_q -> (p+w)M_q``.  Rows are produced on demand, so a bimodule has no
fixed rectangle of rows; each row carries its own certified window.

The bimodule attached to a functor ``F: GrMod A -> GrMod B`` has rows
``F(A(p))`` and left action ``F(lambda_x)``.  For ``F`` the restriction along
``psi: B -> A`` this is :func:`watts_bimodule`.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

from .errors import ContextMismatch, DegreeAboveBound, WindowInsufficient
from .groebner import GradedAlgebra
from .linalg import Matrix, RowSpace
from .modules import (
    GradedModule,
    ModuleMapSpace,
    graded_hom,
    regular_module,
    restrict_along,
    restrict_window,
    shift,
)
from .morphism import AlgebraMorphism


class BigradedBimodule:
    """``A``-``B`` bimodule given by a row factory and a left-action factory.

    ``row(p)`` returns the right ``B``-module ``pM_*``; ``left(k, p, q)``
    returns the matrix of the ``k``-th generator of ``A`` from ``pM_q`` to
    ``(p+w_k)M_q``.  ``support_floor(q)``, when known, is a ``p`` below which
    ``pM_q`` vanishes; it is what certifies truncated tensor products.
    """

    def __init__(self, left: GradedAlgebra, right: GradedAlgebra,
                 row: Callable[[int], GradedModule],
                 left_action: Callable[[int, int, int], Matrix],
                 support_floor: Callable[[int], int] | None = None,
                 row_period: int | None = None, name: str | None = None):
        self.left_algebra = left
        self.right_algebra = right
        self._row = row
        self._left = left_action
        self.support_floor = support_floor
        self.row_period = row_period
        self.name = name
        self._rows: dict[int, GradedModule] = {}
        self._lcache: dict = {}

    def row(self, p: int) -> GradedModule:
        m = self._rows.get(p)
        if m is None:
            m = self._row(p)
            self._rows[p] = m
        return m

    def dim(self, p: int, q: int) -> int:
        return self.row(p).dim(q)

    def left(self, k: int, p: int, q: int) -> Matrix:
        key = (k, p, q)
        m = self._lcache.get(key)
        if m is None:
            m = self._left(k, p, q)
            self._lcache[key] = m
        return m

    def left_map_images(self, k: int, p: int, target: GradedModule) -> list[list]:
        """Images in ``(p+w)M`` of the generators of ``pM`` under ``x_k``."""
        src = self.row(p)
        pres = src.presentation
        return [self.left(k, p, d).apply(v) for d, v in zip(pres.degrees, src.generator_vectors)]

    def dim_table(self, prange, qrange) -> dict[tuple[int, int], int]:
        return {(p, q): self.dim(p, q) for p in prange for q in qrange}

    def check_bimodule(self, prange, qrange) -> list[tuple]:
        """Pairs where left and right actions fail to commute."""
        bad = []
        A, B = self.left_algebra, self.right_algebra
        for p in prange:
            rp = self.row(p)
            for q in qrange:
                if rp.dim(q) == 0:
                    continue
                for k, wk in enumerate(A.weights):
                    rt = self.row(p + wk)
                    for j, wj in enumerate(B.weights):
                        if q + wj > min(rp.hi, rt.hi):
                            continue
                        lhs = self.left(k, p, q) @ rt.action(j, q)
                        rhs = rp.action(j, q) @ self.left(k, p, q + wj)
                        if lhs != rhs:
                            bad.append((p, q, k, j))
        return bad

    def __repr__(self):
        return f"BigradedBimodule({self.name or ''})"


def watts_bimodule(psi: AlgebraMorphism, name: str | None = None) -> BigradedBimodule:
    """Bimodule of the restriction functor ``psi_*: GrMod R -> GrMod T``.

    Rows are ``psi_*(R(p))``, so ``pM_q = R_{p + s q}`` where ``s`` is the
    scale of ``psi``; ``x`` in ``R`` acts by left multiplication.
    """
    R, T, s = psi.target, psi.source, psi.scale
    reg = regular_module(R)

    def row(p: int) -> GradedModule:
        return restrict_along(psi, shift(reg, p), name=f"row {p}")

    def left(k: int, p: int, q: int) -> Matrix:
        e = p + s * q
        t = e + R.weights[k]
        if e < 0:
            return Matrix._trusted(R.field, [], R.dim(t) if t >= 0 else 0)
        return R.left_mult(k, e)

    return BigradedBimodule(R, T, row, left, support_floor=lambda q: -s * q, row_period=s,
                            name=name or "watts")


# ---------------------------------------------------------------------------
# tensor


def bar_tensor(l: GradedModule, m: BigradedBimodule, window: tuple[int, int] | None = None,
               name: str | None = None) -> GradedModule:
    """``L (x)bar_A M``: degree ``q`` is ``(+)_p L_{-p} (x) pM_q`` modulo
    ``l a (x) m - l (x) a m``, computed degree-wise."""
    if l.algebra is not m.left_algebra:
        raise ContextMismatch("module is not over the bimodule's left algebra")
    A, B = m.left_algebra, m.right_algebra
    f = A.field
    ps = list(range(-l.hi, -l.lo + 1))
    rows = {p: m.row(p) for p in ps}
    nonzero_ps = [p for p in ps if l.dim(-p)]
    if not nonzero_ps:
        lo, hi = (0, 0) if window is None else window
        from .modules import zero_module

        return zero_module(B, lo, hi)
    lo = min(rows[p].lo for p in nonzero_ps)
    hi = min(rows[p].hi for p in nonzero_ps)
    if m.support_floor is not None:
        # (L (x) M)_q only sees rows p >= support_floor(q); all must be in range
        while hi >= lo and m.support_floor(hi) < -l.hi:
            hi -= 1
    if window is not None:
        if window[1] > hi:
            raise WindowInsufficient("tensor not certified in requested degree", window[1])
        hi = window[1]
        lo = min(lo, window[0])

    def layout(q):
        offs, cells, pos = {}, [], 0
        for p in nonzero_ps:
            offs[p] = pos
            dm = rows[p].dim(q)
            cells.extend((p, i, j) for i in range(l.dim(-p)) for j in range(dm))
            pos += l.dim(-p) * dm
        return offs, cells

    spaces = {}
    for q in range(lo, hi + 1):
        offs, cells = layout(q)
        n = len(cells)
        rels = []
        # l a (x) m - l (x) a m for l in L_{-p-w}, a in A_w, m in pM_q; the
        # first term may vanish (L_{-p} = 0) while the second does not
        for p in ps:
            dm = rows[p].dim(q)
            if dm == 0:
                continue
            for k, w in enumerate(A.weights):
                src = p + w
                if src not in offs:
                    continue
                la = l.action(k, -src)  # L_{-p-w} -> L_{-p}
                am = m.left(k, p, q)    # pM_q -> (p+w)M_q
                dm2 = rows[src].dim(q)
                for i, lrow in enumerate(la.rows):
                    for j in range(dm):
                        v = [f.zero] * n
                        if p in offs:
                            for i2, c in enumerate(lrow):
                                if c:
                                    v[offs[p] + i2 * dm + j] += c
                        for j2, c in enumerate(am.rows[j]):
                            if c:
                                v[offs[src] + i * dm2 + j2] -= c
                        rels.append(v)
        spaces[q] = (RowSpace(f, n, rels), offs, cells)
    dims = [spaces[q][0].codim for q in range(lo, hi + 1)]
    acts = {}
    for j, w in enumerate(B.weights):
        for q in range(lo, hi - w + 1):
            R0, _, cells0 = spaces[q]
            R1, offs1, cells1 = spaces[q + w]
            out = []
            for pos in R0.complement_positions:
                p, i, jj = cells0[pos]
                img = rows[p].action(j, q).rows[jj]
                dm1 = rows[p].dim(q + w)
                v = [f.zero] * len(cells1)
                for j2, c in enumerate(img):
                    if c:
                        v[offs1[p] + i * dm1 + j2] = c
                out.append(R1.quotient_coords(v))
            acts[(j, q)] = Matrix._trusted(f, out, R1.codim)
    return GradedModule(B, lo, hi, dims, acts, name=name or "L (x) M")


# ---------------------------------------------------------------------------
# Hom_


@dataclass
class UnderlineHom:
    """The module ``Hom_B(M, N)`` plus the Hom spaces behind each degree."""

    module: GradedModule
    spaces: dict[int, ModuleMapSpace] = dc_field(default_factory=dict)
    exact: bool = False


def _row_for_hom(m: BigradedBimodule, p: int, n: GradedModule) -> GradedModule:
    row = m.row(-p)
    top = min(row.hi, n.hi)
    if top < row.hi:
        row = restrict_window(row, hi=max(top, row.lo - 1))
    return row


def _vanishing_below(m: BigradedBimodule, plo: int, n: GradedModule) -> tuple[bool, bool]:
    """Whether ``Hom(row_{-p}, N) = 0`` for all ``p < plo``; second flag: proven.

    Uses the periodicity of watts rows: ``row_{r+s}`` is ``row_r`` shifted down
    by one, so once the generators of ``s`` consecutive rows sit below the
    support of ``N`` every later row does too.  Generators read off from
    degree-wise data are only known up to the row's top; when the top
    ``max_weight`` degrees of such a row produce no new generator the list is
    taken as settled, and the answer is flagged as unproven.
    """
    s = m.row_period
    if s is None:
        return False, False
    proven = True
    margin = m.right_algebra.max_weight
    for r in range(-plo + 1, -plo + s + 1):
        row = m.row(r)
        degs = row.presentation.degrees
        if degs and max(degs) >= n.lo:
            return False, False
        if not row.presentation.complete and row.hi < n.hi:
            if row.hi - margin < row.lo or (degs and max(degs) > row.hi - margin):
                return False, False
            proven = False
    return True, proven


def _relations_fit(m: BigradedBimodule, p: int, n: GradedModule) -> bool:
    """Whether the generators and relations of ``row_{-p}`` land inside N's window.

    Degrees are read off the base rows ``0..s-1`` (the longest ones) and moved
    by periodicity; past this point ``Hom`` into the truncated ``N`` overcounts.
    """
    s = m.row_period
    if s is None:
        return m.row(-p).lo <= n.hi
    r0 = (-p) % s
    k = (-p - r0) // s
    pres = m.row(r0).presentation
    degs = list(pres.degrees) + [d for d, _ in pres.relations]
    return not degs or max(degs) - k <= n.hi


def underline_hom(m: BigradedBimodule, n: GradedModule, window: tuple[int, int] | None = None,
                  name: str | None = None, full: bool = False):
    """``Hom_B(M, N)`` with ``Hom_B(M, N)_p = Hom_{Gr B}(_{-p}M_*, N)``.

    Right ``A``-action: ``(h . a)(m) = h(a m)``.  With ``window = (lo, hi)``
    the result is the truncation to degrees ``>= lo``; without it, ``lo`` is
    lowered until every smaller degree provably vanishes.  ``full=True``
    returns an :class:`UnderlineHom` carrying the Hom spaces.
    """
    if n.algebra is not m.right_algebra:
        raise ContextMismatch("module is not over the bimodule's right algebra")
    A = m.left_algebra
    f = A.field
    if window is None:
        s = m.row_period or 1
        hi = s * n.hi
        lo = min(0, s * n.lo)
        for _ in range(64):
            below, proven = _vanishing_below(m, lo, n)
            if below:
                break
            lo -= 1
        else:
            raise WindowInsufficient("could not bound the support of Hom_ from below", lo)
        hi = lo
        while hi < s * n.hi and _relations_fit(m, hi + 1, n):
            hi += 1
    else:
        lo, hi = window
    spaces: dict[int, ModuleMapSpace] = {}
    exact = proven if window is None else True
    for p in range(lo, hi + 1):
        row = _row_for_hom(m, p, n)
        sp = graded_hom(row, n, 0)
        exact = exact and sp.exact
        spaces[p] = sp
    dims = [spaces[p].dim for p in range(lo, hi + 1)]
    acts = {}
    for k, w in enumerate(A.weights):
        for p in range(lo, hi - w + 1):
            src, tgt = spaces[p], spaces[p + w]
            rsrc = tgt.domain  # row_{-p-w}
            rows_out = []
            for b in range(src.dim):
                h = src.map(b)
                imgs = []
                for d, v in zip(rsrc.presentation.degrees, rsrc.generator_vectors):
                    if d > h.domain.hi:
                        raise WindowInsufficient("left action leaves certified row", d)
                    try:
                        lv = m.left(k, -p - w, d).apply(v)
                    except DegreeAboveBound as exc:
                        raise WindowInsufficient("left action exceeds the algebra bound", d) from exc
                    imgs.append(h.matrix(d).apply(lv) if h.domain.dim(d) else n.zero(d))
                c = tgt.coordinates(imgs)
                if c is None:
                    raise WindowInsufficient("precomposed map not in target Hom space", p + w)
                rows_out.append(c)
            acts[(k, p)] = Matrix._trusted(f, rows_out, tgt.dim)
    mod = GradedModule(A, lo, hi, dims, acts, name=name or "Hom_(M, N)")
    if full:
        return UnderlineHom(mod, spaces, exact)
    return mod


def coinduce_along(phi: AlgebraMorphism, m: GradedModule, window: tuple[int, int] | None = None,
                   name: str | None = None) -> GradedModule:
    """``f^! M``: ``(f^! M)_p = Hom_{Gr A}(f_* B(-p), M)`` with ``B`` acting by
    precomposition with left multiplication."""
    if m.algebra is not phi.source:
        raise ContextMismatch("module is not over the morphism's source")
    return underline_hom(watts_bimodule(phi), m, window,
                         name=name or (f"f^!{m.name}" if m.name else None))


# ---------------------------------------------------------------------------
# adjunction


@dataclass
class AdjunctionSample:
    label: str
    lhs: int
    rhs: int
    exact: bool

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def adjunction_check(l: GradedModule, m: BigradedBimodule, n: GradedModule,
                     label: str = "") -> AdjunctionSample:
    """Compare ``dim Hom_B(L (x)bar M, N)`` with ``dim Hom_A(L, Hom_(M, N))``."""
    t = bar_tensor(l, m)
    pres = t.presentation
    top = max([d for d, _ in pres.relations] + list(pres.degrees), default=t.lo)
    if top > n.hi:
        raise WindowInsufficient("N does not cover the tensor's presentation", top)
    lhs_space = graded_hom(t, n, 0)
    lp = l.presentation
    degs = list(lp.degrees) + [d for d, _ in lp.relations]
    if not degs:
        return AdjunctionSample(label, lhs_space.dim, 0, lhs_space.exact)
    h = underline_hom(m, n, (min(lp.degrees), max(degs)))
    rhs_space = graded_hom(l, h, 0)
    return AdjunctionSample(label, lhs_space.dim, rhs_space.dim,
                            lhs_space.exact and rhs_space.exact)
