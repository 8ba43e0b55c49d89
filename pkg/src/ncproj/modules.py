"""Graded right modules, their presentations, Hom spaces and base change.

A :class:`GradedModule` stores, for every degree ``e`` of a certified window
``[lo, hi]``, the dimension of ``M_e`` and one action matrix per algebra
generator (``M_e -> M_{e+w}``, acting on row vectors).  ``M_e = 0`` for
``e < lo`` is part of the contract.  Modules built from a finite
presentation keep it; all other modules regenerate a presentation from the
degree-wise data on demand (minimal generators first, then minimal
relations), certified up to ``hi``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ContextMismatch,
    InhomogeneousRelation,
    WindowExceedsBound,
    WindowInsufficient,
)
from .free import FreePoly, Word
from .groebner import GradedAlgebra
from .linalg import Matrix, RowSpace, _rref, left_kernel, right_inverse_rows, vec_mat
from .morphism import AlgebraMorphism


@dataclass(frozen=True)
class ModulePresentation:
    """Generators in ``degrees``; each relation is ``(degree, {gen: A-vector})``.

    ``bound`` is ``None`` when the presentation is known to be complete,
    otherwise generators and relations are only known through that degree.
    """

    degrees: tuple[int, ...]
    relations: tuple[tuple[int, dict], ...]
    bound: int | None = None

    @property
    def complete(self) -> bool:
        return self.bound is None


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class GradedModule:
    """Finitely generated graded right module over a :class:`GradedAlgebra`."""

    def __init__(self, algebra: GradedAlgebra, lo: int, hi: int, dims: Sequence[int],
                 actions: dict, presentation: ModulePresentation | None = None,
                 generators: Sequence[Sequence] | None = None, name: str | None = None):
        if hi < lo - 1:
            raise ValueError(f"empty window [{lo}, {hi}]")
        if len(dims) != hi - lo + 1:
            raise ValueError("dims must cover the window")
        self.algebra = algebra
        self.lo = lo
        self.hi = hi
        self._dims = list(dims)
        self._act = dict(actions)
        self._presentation = presentation
        self._gen_vecs = [list(g) for g in generators] if generators is not None else None
        self.name = name
        self._word_cache: dict = {}
        self._cover_cache: dict = {}
        self._lift_cache: dict = {}

    # -- basic data ----------------------------------------------------------
    @property
    def field(self):
        return self.algebra.field

    @property
    def window(self) -> tuple[int, int]:
        return self.lo, self.hi

    def dim(self, e: int) -> int:
        if e < self.lo:
            return 0
        if e > self.hi:
            raise WindowInsufficient("module degree outside certified window", e)
        return self._dims[e - self.lo]

    def dims(self, lo: int | None = None, hi: int | None = None) -> list[int]:
        lo = self.lo if lo is None else lo
        hi = self.hi if hi is None else hi
        return [self.dim(e) for e in range(lo, hi + 1)]

    def dim_table(self) -> dict[int, int]:
        return {e: self.dim(e) for e in range(self.lo, self.hi + 1)}

    def is_zero_on_window(self) -> bool:
        return not any(self._dims)

    def zero(self, e: int) -> list:
        return [self.field.zero] * self.dim(e)

    def unit(self, e: int, j: int) -> list:
        v = self.zero(e)
        v[j] = self.field.one
        return v

    def action(self, k: int, e: int) -> Matrix:
        """Matrix of right multiplication by generator ``k`` on ``M_e``."""
        t = e + self.algebra.weights[k]
        if t > self.hi:
            raise WindowInsufficient("action leaves certified window", t)
        if e < self.lo:
            return Matrix._trusted(self.field, [], self.dim(t))
        return self._act[(k, e)]

    def act_word(self, e: int, word: Word) -> Matrix:
        key = (e, word)
        m = self._word_cache.get(key)
        if m is not None:
            return m
        if not word:
            m = Matrix.identity(self.field, self.dim(e))
        else:
            head = word[:-1]
            dh = self.algebra.free.degree(head)
            m = self.act_word(e, head) @ self.action(word[-1], e + dh)
        self._word_cache[key] = m
        return m

    def act_elem(self, e: int, a: Sequence, da: int) -> Matrix:
        """Right multiplication by the element ``a`` of ``A_da`` on ``M_e``."""
        t = e + da
        out = Matrix.zeros(self.field, self.dim(e), self.dim(t))
        if self.dim(e) == 0 or self.dim(t) == 0:
            return out
        for w, c in zip(self.algebra.basis(da), a):
            if c:
                out = out + self.act_word(e, w).scale(c)
        return out

    def act_poly(self, e: int, f: FreePoly) -> Matrix:
        """Right multiplication by a free polynomial (words need not be normal)."""
        d = f.degree()
        out = Matrix.zeros(self.field, self.dim(e), self.dim(e + d))
        for w, c in f.terms.items():
            out = out + self.act_word(e, w).scale(c)
        return out

    # -- presentation ----------------------------------------------------------
    @property
    def presentation(self) -> ModulePresentation:
        if self._presentation is None:
            self._presentation, self._gen_vecs = _presentation_from_data(self)
        return self._presentation

    @property
    def generator_vectors(self) -> list[list]:
        self.presentation
        return self._gen_vecs

    def generator_degrees(self) -> tuple[int, ...]:
        return self.presentation.degrees

    def cover_layout(self, e: int) -> list[tuple[int, Word]]:
        """Basis ``(generator, normal word)`` of the free cover in degree ``e``."""
        out = []
        for i, d in enumerate(self.presentation.degrees):
            if d <= e:
                out.extend((i, u) for u in self.algebra.basis(e - d))
        return out

    def free_cover_map(self, e: int) -> Matrix:
        m = self._cover_cache.get(e)
        if m is None:
            gens = self.generator_vectors
            degs = self.presentation.degrees
            rows = [self.act_word(degs[i], u).apply(gens[i]) for i, u in self.cover_layout(e)]
            m = Matrix._trusted(self.field, rows, self.dim(e))
            self._cover_cache[e] = m
        return m

    def lift(self, e: int) -> Matrix:
        """Rows: a preimage in the free cover of each basis vector of ``M_e``."""
        m = self._lift_cache.get(e)
        if m is None:
            m = right_inverse_rows(self.free_cover_map(e)) if self.dim(e) else \
                Matrix._trusted(self.field, [], len(self.cover_layout(e)))
            self._lift_cache[e] = m
        return m

    def check_relations(self) -> list[tuple[int, str]]:
        """Degrees where a defining relation of the algebra acts nonzero."""
        bad = []
        for r in self.algebra.presentation.relations:
            d = r.degree()
            for e in range(self.lo, self.hi - d + 1):
                if self.dim(e) and not self.act_poly(e, r).is_zero():
                    bad.append((e, str(r)))
        return bad

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"GradedModule({label}window=[{self.lo}, {self.hi}], dims={self._dims})"


def _cover_right_mult(alg: GradedAlgebra, degs: Sequence[int], e: int, k: int) -> Matrix:
    """Right multiplication by ``x_k`` on the free cover ``F_e -> F_{e+w}``."""
    w = alg.weights[k]
    src = [(i, d) for i, d in enumerate(degs) if d <= e]
    tgt = [(i, d) for i, d in enumerate(degs) if d <= e + w]
    offs = {}
    pos = 0
    for i, d in tgt:
        offs[i] = pos
        pos += alg.dim(e + w - d)
    z = alg.field.zero
    rows = []
    for i, d in src:
        blk = alg.right_mult(k, e - d)
        for r in blk.rows:
            row = [z] * pos
            row[offs[i]:offs[i] + len(r)] = r
            rows.append(row)
    return Matrix._trusted(alg.field, rows, pos)


def _presentation_from_data(m: GradedModule) -> tuple[ModulePresentation, list[list]]:
    """Minimal generators and relations recovered from the degree-wise data."""
    alg = m.algebra
    f = m.field
    degs: list[int] = []
    gens: list[list] = []
    rels: list[tuple[int, dict]] = []
    kernels: dict[int, RowSpace] = {}
    for e in range(m.lo, m.hi + 1):
        n = m.dim(e)
        imgs = []
        for k, w in enumerate(alg.weights):
            s = e - w
            if s >= m.lo and m.dim(s):
                imgs.extend(m.action(k, s).rows)
        image = RowSpace(f, n, imgs)
        for j in image.complement_positions:
            degs.append(e)
            gens.append(m.unit(e, j))
        # free cover map in degree e
        layout = []
        for i, d in enumerate(degs):
            layout.extend((i, u) for u in alg.basis(e - d))
        rows = [m.act_word(degs[i], u).apply(gens[i]) for i, u in layout]
        fmap = Matrix._trusted(f, rows, n)
        K = RowSpace(f, len(layout), left_kernel(fmap).rows) if layout else RowSpace(f, 0)
        kernels[e] = K
        # relations generated from lower degrees
        lower = []
        for k, w in enumerate(alg.weights):
            s = e - w
            if s in kernels and kernels[s].dim:
                R = _cover_right_mult(alg, degs, s, k)
                lower.extend(R.apply(v) for v in kernels[s].basis)
        span = RowSpace(f, len(layout), lower)
        for v in K.basis:
            if not span.contains(v):
                span = span.sum(RowSpace(f, len(layout), [v]))
                comp: dict = {}
                pos = 0
                for i, d in enumerate(degs):
                    size = alg.dim(e - d)
                    blk = list(v[pos:pos + size])
                    if any(blk):
                        comp[i] = blk
                    pos += size
                rels.append((e, comp))
    return ModulePresentation(tuple(degs), tuple(rels), bound=m.hi), gens


# ---------------------------------------------------------------------------
# constructors


def _relation_vectors(alg: GradedAlgebra, degrees: Sequence[int], rel) -> tuple[int, dict]:
    """Normalize one relation to ``(degree, {gen: vector})``."""
    if isinstance(rel, tuple) and len(rel) == 2 and isinstance(rel[1], dict):
        return rel
    comps = list(rel)
    if len(comps) != len(degrees):
        raise ContextMismatch(f"relation has {len(comps)} components for {len(degrees)} generators")
    total = None
    for i, a in enumerate(comps):
        if isinstance(a, FreePoly) and a.terms:
            d = degrees[i] + a.degree()
            if total is not None and d != total:
                raise InhomogeneousRelation(f"relation components of degrees {total} and {d}")
            total = d
    if total is None:
        return (None, {})
    out = {}
    for i, a in enumerate(comps):
        if isinstance(a, FreePoly) and a.terms:
            _, v = alg.vector(a)
            if any(v):
                out[i] = v
    return total, out


def present_module(a: GradedAlgebra, gens: Sequence[int], rels: Iterable = (),
                   window: tuple[int, int] | int | None = None,
                   name: str | None = None) -> GradedModule:
    """``M = (free cover) / (relations)`` computed degree-wise on ``window``.

    ``rels`` holds one sequence per relation, with one :class:`FreePoly` (or 0)
    per generator: ``[x, 0]`` is the relation ``g_1 * x``.
    """
    degs = tuple(gens)
    relations = []
    for r in rels:
        d, comp = _relation_vectors(a, degs, r)
        if d is not None and comp:
            relations.append((d, comp))
    lo_default = min(degs) if degs else 0
    if window is None:
        lo, hi = lo_default, a.D + lo_default
    elif isinstance(window, int):
        lo, hi = lo_default, window
    else:
        lo, hi = window
    lo = min(lo, lo_default) if degs else lo
    if degs and hi - min(degs) > a.D:
        raise WindowExceedsBound(
            f"window top {hi} needs algebra degree {hi - min(degs)} > D={a.D}", hi
        )
    f = a.field
    z = f.zero
    dims, actions = [], {}
    quotients: dict[int, tuple[RowSpace, list]] = {}

    def layout(e):
        out, offs, pos = [], {}, 0
        for i, d in enumerate(degs):
            if d <= e:
                offs[i] = pos
                size = a.dim(e - d)
                out.extend((i, u) for u in a.basis(e - d))
                pos += size
        return out, offs, pos

    for e in range(lo, hi + 1):
        lay, offs, n = layout(e)
        rows = []
        for d, comp in relations:
            if d > e:
                continue
            for v in a.basis(e - d):
                row = [z] * n
                nonzero = False
                for i, vec in comp.items():
                    prod = a.product(vec, d - degs[i], a.word_vector(v), e - d)
                    o = offs[i]
                    for j, c in enumerate(prod):
                        if c:
                            row[o + j] += c
                            nonzero = True
                if nonzero:
                    rows.append(row)
        R = RowSpace(f, n, rows)
        quotients[e] = (R, lay, offs)
        dims.append(R.codim)
    for e in range(lo, hi + 1):
        R, lay, offs = quotients[e]
        free_pos = R.complement_positions
        for k, w in enumerate(a.weights):
            t = e + w
            if t > hi:
                continue
            Rt, layt, offst = quotients[t]
            nt = len(layt)
            rows = []
            for j in free_pos:
                i, u = lay[j]
                img = a.word_vector(u + (k,))
                vec = [z] * nt
                vec[offst[i]:offst[i] + len(img)] = img
                rows.append(Rt.quotient_coords(vec))
            actions[(k, e)] = Matrix._trusted(f, rows, Rt.codim)
    gen_vecs = []
    for i, d in enumerate(degs):
        if lo <= d <= hi:
            R, lay, offs = quotients[d]
            vec = [z] * len(lay)
            vec[offs[i]] = f.one  # the empty word sits first in A_0
            gen_vecs.append(R.quotient_coords(vec))
        else:
            gen_vecs.append(None)
    pres = ModulePresentation(degs, tuple(relations), bound=None)
    mod = GradedModule(a, lo, hi, dims, actions, presentation=pres, generators=gen_vecs,
                       name=name)
    return mod


def regular_module(a: GradedAlgebra, shift: int = 0, window=None) -> GradedModule:
    """``A(shift)``: the free module with one generator in degree ``-shift``."""
    return present_module(a, [-shift], [], window, name=f"A({shift})" if shift else "A")


def zero_module(a: GradedAlgebra, lo: int, hi: int) -> GradedModule:
    return GradedModule(a, lo, hi, [0] * (hi - lo + 1),
                        {(k, e): Matrix._trusted(a.field, [], 0)
                         for k, w in enumerate(a.weights) for e in range(lo, hi + 1) if e + w <= hi},
                        presentation=ModulePresentation((), (), None), generators=[], name="0")


def from_data(a: GradedAlgebra, lo: int, hi: int, dims: Sequence[int], actions: dict,
              name: str | None = None) -> GradedModule:
    return GradedModule(a, lo, hi, dims, actions, name=name)


def shift(m: GradedModule, p: int) -> GradedModule:
    """``M(p)`` with ``M(p)_e = M_{e+p}``."""
    acts = {(k, e - p): mat for (k, e), mat in m._act.items()}
    pres = gens = None
    if m._presentation is not None:
        pr = m._presentation
        pres = ModulePresentation(
            tuple(d - p for d in pr.degrees),
            tuple((d - p, comp) for d, comp in pr.relations),
            None if pr.bound is None else pr.bound - p,
        )
        gens = m._gen_vecs
    name = f"{m.name}({p})" if m.name else None
    return GradedModule(m.algebra, m.lo - p, m.hi - p, m._dims, acts, pres, gens, name)


def direct_sum(m: GradedModule, n: GradedModule) -> GradedModule:
    if m.algebra is not n.algebra:
        raise ContextMismatch("direct sum of modules over different algebras")
    a = m.algebra
    lo, hi = min(m.lo, n.lo), min(m.hi, n.hi)
    z = a.field.zero
    dims = [m.dim(e) + n.dim(e) for e in range(lo, hi + 1)]
    acts = {}
    for k, w in enumerate(a.weights):
        for e in range(lo, hi - w + 1):
            A1, A2 = m.action(k, e), n.action(k, e)
            c1, c2 = A1.ncols, A2.ncols
            rows = [list(r) + [z] * c2 for r in A1.rows] + [[z] * c1 + list(r) for r in A2.rows]
            acts[(k, e)] = Matrix._trusted(a.field, rows, c1 + c2)
    return GradedModule(a, lo, hi, dims, acts,
                        name=f"{m.name or 'M'} + {n.name or 'N'}")


def restrict_window(m: GradedModule, lo: int | None = None, hi: int | None = None) -> GradedModule:
    """Same module, certified on a smaller window (``lo`` may not exceed support)."""
    lo = m.lo if lo is None else lo
    hi = m.hi if hi is None else hi
    if hi > m.hi:
        raise WindowInsufficient("cannot enlarge a window", hi)
    if lo > m.lo and any(m.dim(e) for e in range(m.lo, lo)):
        raise ValueError("raising lo would drop nonzero components; use truncate()")
    dims = [m.dim(e) for e in range(lo, hi + 1)]
    acts = {(k, e): mat for (k, e), mat in m._act.items() if e + m.algebra.weights[k] <= hi and e >= lo}
    for k, w in enumerate(m.algebra.weights):
        for e in range(lo, min(m.lo, hi - w + 1)):
            acts[(k, e)] = Matrix._trusted(m.field, [], m.dim(e + w))
    pres, gens = None, None
    if m._presentation is not None and m._presentation.complete:
        pres, gens = m._presentation, m._gen_vecs
    return GradedModule(m.algebra, lo, hi, dims, acts, pres, gens, m.name)


def truncate(m: GradedModule, s: int) -> GradedModule:
    """The submodule ``M_{>= s}``."""
    lo = max(m.lo, s)
    dims = [m.dim(e) for e in range(lo, m.hi + 1)]
    acts = {(k, e): mat for (k, e), mat in m._act.items() if e >= lo}
    return GradedModule(m.algebra, lo, m.hi, dims, acts,
                        name=f"{m.name}_>={s}" if m.name else None)


def submodule(m: GradedModule, spaces: dict[int, RowSpace], name: str | None = None,
              lo: int | None = None, hi: int | None = None) -> GradedModule:
    """Graded subspace closed under the action, as a module in its own right."""
    lo = m.lo if lo is None else lo
    hi = m.hi if hi is None else hi
    f = m.field

    def space(e):
        return spaces.get(e) or RowSpace(f, m.dim(e))

    dims = [space(e).dim for e in range(lo, hi + 1)]
    acts = {}
    for k, w in enumerate(m.algebra.weights):
        for e in range(lo, hi - w + 1):
            S, T = space(e), space(e + w)
            rows = []
            for b in S.basis:
                c = T.coordinates(m.action(k, e).apply(b))
                if c is None:
                    raise ValueError(f"subspace not closed under generator {k} in degree {e}")
                rows.append(c)
            acts[(k, e)] = Matrix._trusted(f, rows, T.dim)
    return GradedModule(m.algebra, lo, hi, dims, acts, name=name)


def quotient(m: GradedModule, spaces: dict[int, RowSpace], name: str | None = None) -> GradedModule:
    """``M / S`` for a graded submodule given degree-wise."""
    f = m.field

    def space(e):
        return spaces.get(e) or RowSpace(f, m.dim(e))

    dims = [space(e).codim for e in range(m.lo, m.hi + 1)]
    acts = {}
    for k, w in enumerate(m.algebra.weights):
        for e in range(m.lo, m.hi - w + 1):
            S, T = space(e), space(e + w)
            rows = [T.quotient_coords(m.action(k, e).rows[j]) for j in S.complement_positions]
            acts[(k, e)] = Matrix._trusted(f, rows, T.codim)
    return GradedModule(m.algebra, m.lo, m.hi, dims, acts, name=name)


# ---------------------------------------------------------------------------
# Hom


class ModuleMap:
    """Degree-``shift`` module map ``M -> N(shift)`` fixed by generator images."""

    def __init__(self, domain: GradedModule, codomain: GradedModule, shift: int,
                 images: Sequence[Sequence]):
        self.domain = domain
        self.codomain = codomain
        self.shift = shift
        self.images = [list(v) for v in images]
        self._mats: dict[int, Matrix] = {}

    def matrix(self, e: int) -> Matrix:
        """``M_e -> N_{e+shift}``."""
        mat = self._mats.get(e)
        if mat is None:
            dom, cod, s = self.domain, self.codomain, self.shift
            t = e + s
            degs = dom.presentation.degrees
            rows = []
            for i, u in dom.cover_layout(e):
                if cod.dim(degs[i] + s) == 0:
                    rows.append(cod.zero(t))
                else:
                    rows.append(cod.act_word(degs[i] + s, u).apply(self.images[i]))
            psi = Matrix._trusted(dom.field, rows, cod.dim(t))
            mat = dom.lift(e) @ psi
            self._mats[e] = mat
        return mat

    def kernel(self, e: int) -> RowSpace:
        return RowSpace(self.domain.field, self.domain.dim(e), left_kernel(self.matrix(e)).rows)

    def image(self, e: int) -> RowSpace:
        return RowSpace(self.domain.field, self.codomain.dim(e + self.shift), self.matrix(e).rows)


class ModuleMapSpace:
    """Basis of ``Hom_{Gr A}(M, N(shift))`` as tuples of generator images."""

    def __init__(self, domain: GradedModule, codomain: GradedModule, shift: int,
                 basis: list[tuple[list, ...]], exact: bool):
        self.domain = domain
        self.codomain = codomain
        self.shift = shift
        self.basis = basis
        self.exact = exact

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def map(self, i: int) -> ModuleMap:
        return ModuleMap(self.domain, self.codomain, self.shift, self.basis[i])

    def combination(self, coeffs: Sequence) -> ModuleMap:
        imgs = None
        for c, b in zip(coeffs, self.basis):
            scaled = [[c * x for x in v] for v in b]
            imgs = scaled if imgs is None else [[x + y for x, y in zip(u, v)] for u, v in zip(imgs, scaled)]
        if imgs is None:
            degs = self.domain.presentation.degrees
            imgs = [self.codomain.zero(d + self.shift) for d in degs]
        return ModuleMap(self.domain, self.codomain, self.shift, imgs)

    def flat(self, images: Sequence[Sequence]) -> list:
        return [x for v in images for x in v]

    def coordinates(self, images: Sequence[Sequence]) -> list | None:
        """Coefficients of a map (given by generator images) in this basis."""
        target = self.flat(images)
        if not self.basis:
            return [] if not any(target) else None
        rows = [self.flat(b) for b in self.basis]
        n = len(rows)
        f = self.domain.field
        aug = [list(col) + [f.zero] for col in zip(*rows)]
        for r, t in zip(aug, target):
            r[-1] = -t
        # solve sum c_i rows_i = target  <=>  kernel vector with last coordinate 1
        red, piv = _rref([list(r) for r in aug], n + 1)
        if n in piv:
            return None
        sol = [f.zero] * n
        for row, pc in zip(red, piv):
            sol[pc] = -row[n]
        return sol

    def __repr__(self):
        return f"ModuleMapSpace(dim={self.dim}, shift={self.shift})"


def graded_hom(m: GradedModule, n: GradedModule, shift: int = 0) -> ModuleMapSpace:
    """``Hom_{Gr A}(M, N(shift))`` solved from a presentation of ``M``.

    Generator ``g_i`` of degree ``d_i`` goes to ``N_{d_i + shift}``; every
    relation ``sum_i g_i a_i`` must map to zero in ``N``.
    """
    if m.algebra is not n.algebra:
        raise ContextMismatch("Hom between modules over different algebras")
    pres = m.presentation
    degs = pres.degrees
    f = m.field
    sizes = []
    for d in degs:
        t = d + shift
        if t > n.hi:
            raise WindowInsufficient("codomain window misses a generator image degree", t)
        sizes.append(n.dim(t))
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    total = sum(sizes)
    cols: list[list] = [[] for _ in range(total)]
    for d, comp in pres.relations:
        t = d + shift
        involved = [i for i in comp if sizes[i]]
        if not involved:
            continue
        if t > n.hi:
            raise WindowInsufficient("codomain window misses a relation degree", t)
        width = n.dim(t)
        if width == 0:
            continue
        block = [[f.zero] * width for _ in range(total)]
        for i in involved:
            act = n.act_elem(degs[i] + shift, comp[i], d - degs[i])
            for r, row in enumerate(act.rows):
                block[offsets[i] + r] = [x + y for x, y in zip(block[offsets[i] + r], row)]
        for r in range(total):
            cols[r].extend(block[r])
    ncon = len(cols[0]) if cols else 0
    if total == 0:
        sols = []
    elif ncon == 0:
        sols = [list(r) for r in Matrix.identity(f, total).rows]
    else:
        sols = [list(r) for r in left_kernel(Matrix._trusted(f, cols, ncon)).rows]
    basis = [tuple(s[o:o + z] for o, z in zip(offsets, sizes)) for s in sols]
    return ModuleMapSpace(m, n, shift, basis, exact=pres.complete)


# ---------------------------------------------------------------------------
# base change along algebra maps


def restrict_along(phi: AlgebraMorphism, m: GradedModule, name: str | None = None) -> GradedModule:
    """``f_* M``: the target-module ``M`` viewed over the source through ``phi``.

    With ``phi.scale = s`` the degree-``i`` component is ``M_{s i}``.
    """
    if m.algebra is not phi.target:
        raise ContextMismatch("module is not over the morphism's target")
    a = phi.source
    s = phi.scale
    lo = _ceil_div(m.lo, s)
    hi = min(m.hi // s, a.D + lo)
    dims = [m.dim(s * i) for i in range(lo, hi + 1)]
    acts = {}
    for k, w in enumerate(a.weights):
        dw = s * w
        for i in range(lo, hi - w + 1):
            if dw > phi.target.D:
                raise WindowInsufficient("generator image beyond target bound", dw)
            acts[(k, i)] = m.act_elem(s * i, phi._gen_vecs[k], dw)
    return GradedModule(a, lo, hi, dims, acts, name=name or (f"f_*{m.name}" if m.name else None))


def induce_along(phi: AlgebraMorphism, n: GradedModule, window: int | None = None,
                 name: str | None = None) -> GradedModule:
    """``f^* N = N (x)_A B`` from a presentation of ``N``: same generators
    (degrees scaled), relations pushed through ``phi``."""
    if n.algebra is not phi.source:
        raise ContextMismatch("module is not over the morphism's source")
    b = phi.target
    s = phi.scale
    pres = n.presentation
    degs = [s * d for d in pres.degrees]
    rels = []
    for d, comp in pres.relations:
        out = {}
        for i, vec in comp.items():
            img = phi.apply(vec, d - pres.degrees[i])
            if any(img):
                out[i] = img
        if out:
            rels.append((s * d, out))
    cap = b.D + (min(degs) if degs else 0)
    if pres.bound is not None:
        cap = min(cap, s * (pres.bound + 1) - 1)
    hi = cap if window is None else window
    if hi > cap:
        raise WindowInsufficient("requested window beyond certified presentation", hi)
    lo = min(degs) if degs else 0
    if not degs:
        return zero_module(b, 0, hi)
    return present_module(b, degs, rels, (lo, hi),
                          name=name or (f"f^*{n.name}" if n.name else None))


def coinduce_along(phi: AlgebraMorphism, m: GradedModule, window: tuple[int, int] | None = None,
                   name: str | None = None) -> GradedModule:
    """``f^! M`` with ``(f^! M)_p = Hom_{Gr A}(f_* B(-p), M)``; see bimodules."""
    from .bimodules import coinduce_along as _co

    return _co(phi, m, window, name)
