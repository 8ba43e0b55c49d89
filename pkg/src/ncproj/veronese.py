"""Veronese subalgebras ``A^(n)`` (with ``A^(n)_i = A_{ni}``) and the tools around them.

Covers the presentation of ``A^(n)`` by generators and relations found
through a degree bound, its three module functors, the right ideals
``I_r = sum_j A_{nj+r} A`` and their intersection ``I``, the containment
``I^{2n}`` in ``I^(n) A``, the degree-class projectors, a window-level
isomorphism test and the kernel/cokernel of ``f^* f_* M -> M``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .bimodules import underline_hom, watts_bimodule
from .errors import AlgebraNotConcentrated, DegreeAboveBound, WindowInsufficient
from .free import FreeAlgebra, FreePoly, GeneratorInfo, Presentation
from .groebner import GBBuilder, GradedAlgebra
from .ideals import RIGHT, TWO_SIDED, GradedIdeal, closure, is_twosided
from .linalg import Matrix, RowSpace, left_kernel, rank
from .modules import (
    GradedModule,
    ModuleMap,
    graded_hom,
    induce_along,
    restrict_along,
    truncate,
)
from .morphism import AlgebraMorphism


@dataclass
class VeroneseAlgebra:
    parent: GradedAlgebra
    n: int
    algebra: GradedAlgebra
    embedding: AlgebraMorphism
    relation_degrees: list[int]
    bound: int

    @property
    def generator_images(self) -> list[FreePoly]:
        return self.embedding.images

    def hilbert(self) -> list[int]:
        return self.algebra.hilbert()


def veronese_algebra(a: GradedAlgebra, n: int, D: int | None = None,
                     name: str | None = None) -> VeroneseAlgebra:
    """Generators and relations of ``A^(n)`` through Veronese degree ``D // n``.

    Generators of Veronese degree ``i`` are normal words of ``A_{ni}`` spanning
    a complement of the products of lower Veronese degrees.  Relations in
    degree ``i`` are the kernel of evaluating the current normal words of the
    free algebra into ``A_{ni}``; they are fed back into an incremental
    Gröbner completion so the next degree starts from the right quotient.
    """
    if n < 1:
        raise ValueError("n must be positive")
    D = a.D if D is None else D
    if D > a.D:
        raise DegreeAboveBound(f"degree {D} beyond algebra bound {a.D}")
    m = D // n
    f = a.field
    gens: list[GeneratorInfo] = []
    images: list[FreePoly] = []
    img_vecs: list[list] = []
    rel_degrees: list[int] = []
    relations: list[FreePoly] = []
    # products of lower Veronese degrees, as subspaces of A_{ni}
    for i in range(1, m + 1):
        vecs = []
        for j, w in enumerate(g.weight for g in gens):
            if w < i:
                # span of (generator j) * (anything of Veronese degree i - w)
                L = a.left_mult_elem(img_vecs[j], n * w, n * (i - w))
                vecs.extend(L.rows)
        span = RowSpace(f, a.dim(n * i), vecs)
        for pos in span.complement_positions:
            word = a.basis(n * i)[pos]
            gens.append(GeneratorInfo(f"v{len(gens) + 1}", i))
            images.append(a.poly(a.word_vector(word), n * i))
            img_vecs.append(a.word_vector(word))
    free = FreeAlgebra(f, gens)
    builder = GBBuilder(free, m)
    eval_cache: dict = {(): [f.one]}

    def evaluate(word):
        v = eval_cache.get(word)
        if v is None:
            head = evaluate(word[:-1])
            dh = n * free.degree(word[:-1])
            k = word[-1]
            v = a.product(head, dh, img_vecs[k], n * gens[k].weight)
            eval_cache[word] = v
        return v

    for i in range(1, m + 1):
        builder.step()
        gb = builder.gb
        words = [w for w in free.words(i) if gb.is_normal(w)]
        if not words:
            continue
        M = Matrix._trusted(f, [evaluate(w) for w in words], a.dim(n * i))
        ker = left_kernel(M)
        if ker.nrows:
            new = [FreePoly(free, {w: c for w, c in zip(words, row) if c}).monic() for row in ker.rows]
            builder.add_in_current_degree(new)
            relations.extend(new)
            rel_degrees.append(i)
    pres = Presentation(f, gens, relations)
    alg = GradedAlgebra(pres, m, gb=builder.gb,
                        name=name or f"{a.name or 'A'}^({n})")
    want = [a.dim(n * i) for i in range(m + 1)]
    if alg.hilbert() != want:
        raise AssertionError(f"Veronese Hilbert data {alg.hilbert()} != {want}")
    emb = AlgebraMorphism(alg, a, images, scale=n, check=False, name="embedding")
    return VeroneseAlgebra(a, n, alg, emb, sorted(set(rel_degrees)), m)


def veronese_pushforward(m: GradedModule, v: VeroneseAlgebra) -> GradedModule:
    """``f_* M = M^(n)`` over ``A^(n)``."""
    return restrict_along(v.embedding, m, name=f"f_*{m.name}" if m.name else None)


def veronese_pullback(nmod: GradedModule, v: VeroneseAlgebra, window: int | None = None) -> GradedModule:
    """``f^* N = N (x)_{A^(n)} A``."""
    return induce_along(v.embedding, nmod, window, name=f"f^*{nmod.name}" if nmod.name else None)


def veronese_coinduce(nmod: GradedModule, v: VeroneseAlgebra,
                      window: tuple[int, int] | None = None) -> GradedModule:
    """``f^! N`` with ``(f^! N)_i = Hom_{A^(n)}(A(-i)^(n), N)``."""
    return underline_hom(watts_bimodule(v.embedding), nmod, window,
                         name=f"f^!{nmod.name}" if nmod.name else None)


# ---------------------------------------------------------------------------
# the ideals I_r and I


@dataclass
class IdealFamily:
    parent: GradedAlgebra
    n: int
    components: dict[int, GradedIdeal]
    intersection: GradedIdeal
    twosided: bool
    bound: int

    def I(self, r: int) -> GradedIdeal:
        """``I_r``; depends only on ``r`` mod ``n``."""
        return self.components[(r - 1) % self.n + 1]


def ideal_family(a: GradedAlgebra, n: int, D: int | None = None) -> IdealFamily:
    """``I_r = sum_j A_{nj+r} A`` for ``r = 1..n`` and ``I`` their intersection."""
    D = a.D if D is None else D
    if D > a.D:
        raise DegreeAboveBound(f"degree {D} beyond algebra bound {a.D}")
    f = a.field
    comps = {}
    for r in range(1, n + 1):
        seeds = {d: [list(b) for b in RowSpace.full(f, a.dim(d)).basis]
                 for d in range(D + 1) if d % n == r % n and a.dim(d)}
        comps[r] = GradedIdeal(a, closure(a, seeds, D, RIGHT), D, RIGHT, name=f"I_{r}")
    inter = comps[1]
    for r in range(2, n + 1):
        inter = inter.intersect(comps[r])
    ok, _ = is_twosided(inter, D)
    inter = GradedIdeal(a, inter._comp, D, TWO_SIDED if ok else RIGHT, name="I")
    return IdealFamily(a, n, comps, inter, ok, D)


def _right_generators(i: GradedIdeal) -> dict[int, list]:
    return i.minimal_generators(RIGHT)


@dataclass
class LemmaIReport:
    n: int
    bound: int
    power_dims: list[int]
    target_dims: list[int]
    passed: list[bool]
    trivial: bool = False

    @property
    def ok(self) -> bool:
        return all(self.passed)


def check_lemma_I(a: GradedAlgebra, n: int, D: int | None = None,
                  family: IdealFamily | None = None) -> LemmaIReport:
    """Degree-wise check that ``I^{2n}`` lies in the right ideal ``I^(n) A``."""
    D = a.D if D is None else D
    fam = ideal_family(a, n, D) if family is None else family
    I = fam.intersection
    f = a.field
    nz = [e for e in range(D + 1) if I.dim(e)]
    if not nz:
        zeros = [0] * (D + 1)
        return LemmaIReport(n, D, zeros, zeros, [True] * (D + 1), trivial=True)
    if 2 * n * nz[0] > D:
        raise WindowInsufficient(
            f"I^{2 * n} starts in degree {2 * n * nz[0]} beyond bound {D}", 2 * n * nz[0]
        )
    gens = _right_generators(I)
    # P^k = P^{k-1} * I = (P^{k-1} * G) A for right generators G of I
    power = {e: I.component(e) for e in range(D + 1)}
    for _ in range(2 * n - 1):
        seeds: dict[int, list] = {}
        for dg, gvecs in gens.items():
            for e in range(D - dg + 1):
                P = power[e]
                if not P.dim:
                    continue
                for g in gvecs:
                    R = a.right_mult_elem(g, dg, e)
                    seeds.setdefault(e + dg, []).extend(R.apply(b) for b in P.basis)
        power = closure(a, seeds, D, RIGHT)
    vseeds = {e: [list(b) for b in I.component(e).basis] for e in range(0, D + 1, n)}
    target = closure(a, vseeds, D, RIGHT)
    passed = [target[e].contains_space(power[e]) for e in range(D + 1)]
    return LemmaIReport(n, D, [power[e].dim for e in range(D + 1)],
                        [target[e].dim for e in range(D + 1)], passed)


# ---------------------------------------------------------------------------
# degree classes


def concentrated(a: GradedAlgebra, n: int) -> bool:
    return all(a.dim(i) == 0 for i in range(a.D + 1) if i % n)


def projector(m: GradedModule, n: int, r: int) -> GradedModule:
    """``p_r(M) = (+)_i M_{r + i n}``; needs ``A`` concentrated in degrees ``n Z``."""
    a = m.algebra
    if not concentrated(a, n):
        bad = next(i for i in range(a.D + 1) if i % n and a.dim(i))
        raise AlgebraNotConcentrated(f"A_{bad} is nonzero but {n} does not divide {bad}")
    keep = lambda e: (e - r) % n == 0  # noqa: E731
    dims = [m.dim(e) if keep(e) else 0 for e in range(m.lo, m.hi + 1)]
    acts = {}
    for (k, e), mat in m._act.items():
        t = e + a.weights[k]
        acts[(k, e)] = mat if keep(e) else Matrix._trusted(a.field, [], dims[t - m.lo])
    return GradedModule(a, m.lo, m.hi, dims, acts,
                        name=f"p_{r}({m.name})" if m.name else None)


# ---------------------------------------------------------------------------
# window-level isomorphism


def _intertwiner_basis(m: GradedModule, nmod: GradedModule, s: int, hi: int):
    """Basis of degree-wise maps ``X_e: M_e -> N_e`` (``s <= e <= hi``) commuting with actions."""
    a = m.algebra
    f = m.field
    offs, pos = {}, 0
    for e in range(s, hi + 1):
        offs[e] = pos
        pos += m.dim(e) * nmod.dim(e)
    rows = []  # each constraint is a row over the unknowns; collect as columns later
    for k, w in enumerate(a.weights):
        for e in range(s, hi - w + 1):
            Am, An = m.action(k, e), nmod.action(k, e)
            dm, dn = m.dim(e), nmod.dim(e)
            dm2, dn2 = m.dim(e + w), nmod.dim(e + w)
            # (X_e @ An - Am @ X_{e+w})[i, j] = 0
            for i in range(dm):
                for j in range(dn2):
                    row = [f.zero] * pos
                    for l in range(dn):
                        c = An.rows[l][j]
                        if c:
                            row[offs[e] + i * dn + l] += c
                    for l in range(dm2):
                        c = Am.rows[i][l]
                        if c:
                            row[offs[e + w] + l * dn2 + j] -= c
                    if any(row):
                        rows.append(row)
    if not rows:
        return offs, [list(r) for r in Matrix.identity(f, pos).rows]
    from .linalg import kernel_basis

    ker = kernel_basis(Matrix._trusted(f, rows, pos))
    return offs, [list(r) for r in ker.rows]


def tails_window_equal(m: GradedModule, nmod: GradedModule, s: int, hi: int | None = None,
                       seed: int = 0, tries: int = 8) -> bool:
    """Whether ``M_{>=s}`` and ``N_{>=s}`` are isomorphic on the window ``[s, hi]``.

    Solves for all degree-preserving intertwiners and tests random
    combinations for invertibility (seeded).  A window-level proxy only.
    """
    hi = min(m.hi, nmod.hi) if hi is None else hi
    if hi > min(m.hi, nmod.hi):
        raise WindowInsufficient("window beyond module windows", hi)
    if m.algebra is not nmod.algebra:
        return False
    if any(m.dim(e) != nmod.dim(e) for e in range(s, hi + 1)):
        return False
    offs, basis = _intertwiner_basis(m, nmod, s, hi)
    if not basis:
        return all(m.dim(e) == 0 for e in range(s, hi + 1))
    rng = random.Random(seed)
    f = m.field
    for _ in range(tries):
        coeffs = [f.random(rng, 50) for _ in basis]
        x = [sum((c * b[j] for c, b in zip(coeffs, basis)), f.zero) for j in range(len(basis[0]))]
        ok = True
        for e in range(s, hi + 1):
            d = m.dim(e)
            if not d:
                continue
            X = Matrix._trusted(f, [x[offs[e] + i * d:offs[e] + (i + 1) * d] for i in range(d)], d)
            if rank(X) != d:
                ok = False
                break
        if ok:
            return True
    return False


# ---------------------------------------------------------------------------
# f^* f_* M -> M


@dataclass
class DefectReport:
    window: tuple[int, int]
    kernel_dims: dict[int, int]
    cokernel_dims: dict[int, int]
    kernel_killed: bool
    cokernel_killed: bool
    certified: tuple[int, int]
    failures: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.kernel_killed and self.cokernel_killed


def verevkin_defect(a: GradedAlgebra, n: int, m: GradedModule, D: int | None = None,
                    v: VeroneseAlgebra | None = None,
                    family: IdealFamily | None = None) -> DefectReport:
    """Kernel and cokernel of the multiplication map ``f^* f_* M -> M``.

    Both are checked to be annihilated by ``I`` inside the window: for every
    kernel vector ``x`` in degree ``e`` and ``y`` in ``I_d`` with ``e + d``
    in the window, ``x y = 0``; and ``M_e I_d`` lands in the image.
    """
    D = a.D if D is None else D
    v = veronese_algebra(a, n, D) if v is None else v
    fam = ideal_family(a, n, min(D, a.D)) if family is None else family
    I = fam.intersection
    pm = veronese_pushforward(m, v)
    pulled = veronese_pullback(pm, v, window=min(m.hi, n * (pm.hi + 1) - 1, a.D + n * pm.lo))
    gens = pm.generator_vectors
    mu = ModuleMap(pulled, m, 0, gens)
    lo, hi = max(pulled.lo, m.lo), min(pulled.hi, m.hi)
    kdims, cdims = {}, {}
    kernels, images = {}, {}
    for e in range(min(pulled.lo, m.lo), hi + 1):
        if pulled.dim(e) == 0:
            K = RowSpace(m.field, 0)
            Im = RowSpace(m.field, m.dim(e))
        else:
            K = mu.kernel(e)
            Im = mu.image(e)
        kernels[e], images[e] = K, Im
        kdims[e] = K.dim
        cdims[e] = m.dim(e) - Im.dim
    failures = []
    for e in kernels:
        for d in range(1, hi - e + 1):
            comp = I.component(d) if d <= I.hi else None
            if comp is None or not comp.dim:
                continue
            for y in comp.basis:
                if kernels[e].dim:
                    act = pulled.act_elem(e, y, d)
                    for x in kernels[e].basis:
                        if any(act.apply(x)):
                            failures.append(f"kernel degree {e} times I_{d}")
                            break
                if m.dim(e):
                    act = m.act_elem(e, y, d)
                    for row in act.rows:
                        if not images[e + d].contains(row):
                            failures.append(f"M_{e} I_{d} not in image")
                            break
    kk = not any(f_.startswith("kernel") for f_ in failures)
    ck = not any(f_.startswith("M_") for f_ in failures)
    return DefectReport((min(pulled.lo, m.lo), hi), kdims, cdims, kk, ck, (lo, hi),
                        sorted(set(failures)))


# ---------------------------------------------------------------------------
# generation in degree one


@dataclass
class MinVeroneseResult:
    d: int | None
    certified: dict[int, int]


def _veronese_gen1(a: GradedAlgebra, d: int) -> bool | None:
    """``A_d`` generates ``A_{di}`` for every testable ``i >= 2``; ``None`` if untestable."""
    top = a.D // d
    if top < 2:
        return None
    f = a.field
    base = RowSpace.full(f, a.dim(d))
    if not base.dim:
        return False
    cur = base
    for i in range(2, top + 1):
        vecs = []
        for b in base.basis:
            R = a.right_mult_elem(b, d, d * (i - 1))
            vecs.extend(R.apply(x) for x in cur.basis)
        cur = RowSpace(f, a.dim(d * i), vecs)
        if cur.dim != a.dim(d * i):
            return False
    return True


def min_veronese_gen1(a: GradedAlgebra, dmax: int) -> MinVeroneseResult:
    """Smallest ``d <= dmax`` with ``A^(d)`` generated in degree one on the window."""
    cert = {}
    for d in range(1, dmax + 1):
        ok = _veronese_gen1(a, d)
        if ok is None:
            break
        cert[d] = a.D // d
        if ok:
            return MinVeroneseResult(d, cert)
    return MinVeroneseResult(None, cert)
