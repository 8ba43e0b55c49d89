"""Acceptance criteria 1-10.

Each test times itself, records a one-line verdict in ``conftest.ACCEPTANCE_LINES``
(printed in the terminal summary) and fails if the property breaks or the time
limit is exceeded.
"""
from __future__ import annotations

import itertools
import random
import time
from contextlib import contextmanager

from ncproj.bimodules import adjunction_check, watts_bimodule
from ncproj.cli import execute
from ncproj.errors import NotADerivation
from ncproj.groebner import GradedAlgebra
from ncproj.ideals import (
    RIGHT,
    GradedIdeal,
    is_twosided,
    module_times_ideal,
    quotient_algebra,
    quotient_inflate,
    quotient_pullback,
    torsion_submodule,
)
from ncproj.loaders import module_from_spec
from ncproj.modules import direct_sum, graded_hom, present_module, regular_module, shift
from ncproj.morphism import AlgebraMorphism
from ncproj.ore import (
    OreData,
    check_ore_data,
    diagonal_sigma,
    ore_extension,
    ore_hilbert,
    random_inner_delta,
)
from ncproj.report import emit_report
from ncproj.samples import (
    polynomial_ring,
    quantum_plane,
    random_presentation,
    random_skew_ring,
)
from ncproj.veronese import (
    check_lemma_I,
    ideal_family,
    min_veronese_gen1,
    projector,
    verevkin_defect,
    veronese_algebra,
    veronese_coinduce,
    veronese_pullback,
    veronese_pushforward,
)

import conftest
from conftest import SCENARIOS
from oracles import quotient_dims, weighted_polynomial_dims


class _Check:
    def __init__(self):
        self.ok = True
        self.notes: list[str] = []

    def expect(self, cond, note: str) -> None:
        if not cond:
            self.ok = False
            if len(self.notes) < 5:
                self.notes.append(note)


@contextmanager
def criterion(number: int, title: str, limit: float):
    chk = _Check()
    start = time.perf_counter()
    try:
        yield chk
    except Exception as exc:
        chk.expect(False, f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    passed = chk.ok and elapsed < limit
    detail = "" if chk.ok else " | " + "; ".join(chk.notes)
    line = f"[{'PASS' if passed else 'FAIL'}] {number:2d}. {title}: {elapsed:.2f}s (limit {limit:g}s){detail}"
    conftest.ACCEPTANCE_LINES[number] = line
    print(line)
    assert chk.ok, line
    assert elapsed < limit, line


def _random_weighted_skew(rng: random.Random, D: int) -> GradedAlgebra:
    k = rng.randint(2, 3)
    return random_skew_ring(rng, D, ngens=k, weights=[1] + [rng.randint(1, 2) for _ in range(k - 1)])


def test_criterion_01_groebner_oracle():
    with criterion(1, "Groebner dims vs brute-force quotient (100 presentations, D=7)", 60) as c:
        for seed in range(100):
            p = random_presentation(random.Random(seed), max_gens=3, max_weight=2, max_rels=2)
            a = GradedAlgebra(p, 7)
            rels = [dict(r.terms) for r in p.relations]
            want = quotient_dims([g.weight for g in p.generators], rels, 7)
            c.expect(a.hilbert() == want, f"seed {seed}: {a.hilbert()} != {want}")


def test_criterion_02_hilbert_identities():
    with criterion(2, "weighted polynomial rings to D=16 and quantum planes", 10) as c:
        vectors = set()
        for s in range(1, 5):
            for ws in itertools.combinations_with_replacement(range(1, 9), s):
                if sum(ws) <= 8:
                    vectors.add(ws)
        for ws in sorted(vectors):
            a = polynomial_ring(list(ws), 16)
            c.expect(a.hilbert() == weighted_polynomial_dims(ws, 16), f"weights {ws}")
        for q in (1, 2, -1, 3, 5):
            c.expect(quantum_plane(q, 16).hilbert() == list(range(1, 18)), f"q={q}")


def test_criterion_03_veronese_hilbert():
    with criterion(3, "Veronese Hilbert identity (50 instances, n<=4, D=12)", 60) as c:
        for seed in range(50):
            rng = random.Random(seed)
            a = _random_weighted_skew(rng, 12)
            n = rng.randint(1, 4)
            h = veronese_algebra(a, n, 12).hilbert()
            want = [a.dim(n * i) for i in range(len(h))]
            c.expect(len(h) == 12 // n + 1 and h == want, f"seed {seed}, n={n}")


def _adjunction_pool():
    D = 7
    kxy = polynomial_ring([1, 1], D)
    ky = polynomial_ring([1], D, names=["y"])
    qp = quantum_plane(2, D)
    kx = polynomial_ring([1], D)
    ku = polynomial_ring([2], D, names=["u"])
    wtd = polynomial_ring([1, 2], D, names=["x", "z"])
    return [
        AlgebraMorphism.identity(kxy),
        AlgebraMorphism(ky, kxy, [kxy.free.gen(1)]),
        AlgebraMorphism(ky, qp, [qp.free.gen(1)]),
        AlgebraMorphism(ku, kx, [kx.free.gen(0) * kx.free.gen(0)]),
        veronese_algebra(kxy, 2, D).embedding,
        veronese_algebra(wtd, 2, D).embedding,
        veronese_algebra(kx, 3, D).embedding,
    ]


def test_criterion_04_adjunctions():
    with criterion(4, "adjunction Hom dimensions (25 Watts triples + Veronese pairs)", 120) as c:
        rng = random.Random(4)
        pool = _adjunction_pool()
        triples = [(phi, ls, ns) for phi in pool for ls in ["A", "A(1)", "k", "m"] for ns in ["A", "k"]]
        bims = {}
        for phi, ls, ns in rng.sample(triples, 25):
            w = bims.setdefault(id(phi), watts_bimodule(phi))
            s = adjunction_check(module_from_spec(ls, phi.target), w, module_from_spec(ns, phi.source))
            c.expect(s.ok, f"{phi.source.name}->{phi.target.name} L={ls} N={ns}: {s.lhs} != {s.rhs}")
        # f^* -| f_* and f_* -| f^! for the Veronese map, with explicit functors
        a = polynomial_ring([1, 2], 10, names=["x", "z"])
        v = veronese_algebra(a, 2, 10)
        for p in (0, 1):
            nmod = regular_module(v.algebra, window=(0, 3))
            mmod = shift(regular_module(a, window=(0, 9)), p)
            lhs = graded_hom(veronese_pullback(nmod, v), mmod).dim
            rhs = graded_hom(nmod, veronese_pushforward(mmod, v)).dim
            c.expect(lhs == rhs, f"f^* -| f_*, shift {p}: {lhs} != {rhs}")
        for ls, ns in [("k", "A"), ("k", "k"), ("A", "k"), ("m", "k"), ("A(1)", "k"), ("k(1)", "k")]:
            lmod, nmod = module_from_spec(ls, a), module_from_spec(ns, v.algebra)
            lhs = graded_hom(veronese_pushforward(lmod, v), nmod).dim
            rhs = graded_hom(lmod, veronese_coinduce(nmod, v)).dim
            c.expect(lhs == rhs, f"f_* -| f^!, L={ls} N={ns}: {lhs} != {rhs}")


def test_criterion_05_lemma_I():
    with criterion(5, "I^{2n} inside I^(n)A (k[x,z] wt (1,2) + 25 random, D=12)", 120) as c:
        a = polynomial_ring([1, 2], 12, names=["x", "z"])
        rep = check_lemma_I(a, 2, 12)
        c.expect(rep.ok and not rep.trivial, "k[x,z] with weights (1,2), n=2")
        for seed in range(25):
            rng = random.Random(1000 + seed)
            b = _random_weighted_skew(rng, 12)
            n = rng.choice([2, 3])
            c.expect(check_lemma_I(b, n, 12).ok, f"seed {seed}, n={n}")


def test_criterion_06_examples():
    with criterion(6, "worked examples (a)-(e)", 30) as c:
        a = polynomial_ring([1, 2], 12, names=["x", "z"])
        x = a.free.gen(0)
        v = veronese_algebra(a, 2, 12)
        # (a) the point (A/(x))(1) pushes forward to zero
        pt = shift(present_module(a, [0], [[x]], window=(0, 11)), 1)
        c.expect(veronese_pushforward(pt, v).is_zero_on_window(), "(a) f_* of the point")
        # (b) (ax+by)A is two-sided iff q = 1 or ab = 0
        for q in (1, 2, -1):
            qp = quantum_plane(q, 6)
            gx, gy = qp.free.gens()
            for al, be in [(1, 0), (0, 1), (1, 1)]:
                ok, _ = is_twosided(GradedIdeal.generated_by(qp, [gx * al + gy * be], RIGHT))
                c.expect(ok == (q == 1 or al * be == 0), f"(b) q={q} ({al},{be})")
        # (c) I_1 = (x), I_2 = A
        fam = ideal_family(a, 2, 12)
        c.expect(fam.I(1).describe() == "(x)" and fam.I(2).describe() == "A", "(c) ideal family")
        # (d) smallest Veronese generated in degree one
        c.expect(min_veronese_gen1(polynomial_ring([1, 2], 16), 8).d == 2, "(d) weights (1,2)")
        c.expect(min_veronese_gen1(polynomial_ring([2, 3], 16), 8).d == 6, "(d) weights (2,3)")
        # (e) splitting over k[x] with x of weight 2
        kx = polynomial_ring([2], 12)
        m = direct_sum(regular_module(kx, window=(0, 11)), shift(regular_module(kx, window=(0, 12)), 1))
        p0, p1 = projector(m, 2, 0), projector(m, 2, 1)
        c.expect(all(p0.dim(e) + p1.dim(e) == m.dim(e) for e in range(m.lo, m.hi + 1)), "(e) sum")
        c.expect(projector(p0, 2, 0).dims() == p0.dims() and projector(p1, 2, 1).dims() == p1.dims(),
                 "(e) idempotent")
        c.expect(projector(p0, 2, 1).is_zero_on_window() and projector(p1, 2, 0).is_zero_on_window(),
                 "(e) orthogonal")


def test_criterion_07_closed_immersion():
    with criterion(7, "closed immersion functors (20 random (A, J, M))", 60) as c:
        for seed in range(20):
            rng = random.Random(700 + seed)
            a = random_skew_ring(rng, 6, ngens=rng.randint(2, 3))
            f = a.field
            gens = []
            for _ in range(rng.randint(1, 2)):
                d = rng.randint(1, 2)
                gens.append(a.poly([f.random(rng, nonzero=True) for _ in range(a.dim(d))], d))
            j = GradedIdeal.generated_by(a, gens)
            q = quotient_algebra(j)
            m = shift(regular_module(a, window=(0, 5)), rng.randint(0, 1))
            if rng.random() < 0.5:
                m = direct_sum(m, module_from_spec("k(1)", a))
            mj = module_times_ideal(m, j)
            pulled = quotient_pullback(j, m, q)
            inflated = quotient_inflate(j, pulled)
            again = quotient_pullback(j, inflated, q)
            tors = torsion_submodule(j, inflated, q)
            for e in range(m.lo, m.hi + 1):
                c.expect(pulled.dim(e) == m.dim(e) - mj[e].dim, f"seed {seed}: dim identity at {e}")
                c.expect(again.dim(e) == pulled.dim(e), f"seed {seed}: counit at {e}")
            for e in range(tors.lo, tors.hi + 1):
                c.expect(tors.dim(e) == inflated.dim(e), f"seed {seed}: torsion at {e}")


def test_criterion_08_ore():
    with criterion(8, "Ore extensions (10 random, D=12) and a rejected delta", 60) as c:
        for seed in range(10):
            rng = random.Random(800 + seed)
            n = rng.choice([1, 2])
            r = random_skew_ring(rng, 12 + n, ngens=2)
            sigma = diagonal_sigma(r, [r.field.random(rng, nonzero=True) for _ in range(2)])
            o = OreData(r, sigma, random_inner_delta(r, sigma, n, rng), n)
            s = ore_extension(o, 12)
            c.expect(s.hilbert() == ore_hilbert(r.hilbert(12), n, 12), f"seed {seed}, n={n}")
        # on k_2[x,y], delta(x) = x^2 sends y*x - 2*x*y to 2*x*x*y, not to zero
        qp = quantum_plane(2, 8)
        x, y = qp.free.gens()
        bad = OreData(qp, [x, y], [x * x, qp.free.zero()], 1)
        try:
            check_ore_data(bad)
            c.expect(False, "delta(x) = x^2 was accepted")
        except NotADerivation:
            pass


def test_criterion_09_verevkin():
    with criterion(9, "Verevkin defect (k[x,z] wt (1,2) with A(1); degree-one algebras)", 60) as c:
        a = polynomial_ring([1, 2], 12, names=["x", "z"])
        rep = verevkin_defect(a, 2, shift(regular_module(a), 1), 12)
        c.expect(rep.kernel_killed and rep.cokernel_killed, f"k[x,z]: {rep.failures}")
        c.expect(any(rep.cokernel_dims.values()), "k[x,z]: defect unexpectedly zero")
        for b in (polynomial_ring([1, 1], 10), quantum_plane(2, 10), quantum_plane(-1, 10),
                  polynomial_ring([1, 1, 1], 8)):
            for n in (2, 3):
                rep = verevkin_defect(b, n, regular_module(b), b.D)
                zero = all(rep.kernel_dims[e] == 0 and rep.cokernel_dims[e] == 0
                           for e in rep.kernel_dims if e >= 1)
                c.expect(rep.ok and zero, f"{b.name}, n={n}")


def test_criterion_10_determinism():
    with criterion(10, "scenario suite replays byte-identically", 120) as c:
        argv = ["replay", str(SCENARIOS), "--format", "json"]
        code1, rep1 = execute(argv)
        code2, rep2 = execute(argv)
        c.expect(code1 == 0, f"replay failed: {rep1.witnesses[:3]}")
        c.expect(emit_report(rep1, "json") == emit_report(rep2, "json"), "reports differ")
        for path in sorted(SCENARIOS.glob("*.json")):
            spec = __import__("json").loads(path.read_text())
            args = [str(SCENARIOS / a) if (SCENARIOS / a).is_file() else a for a in spec["argv"]]
            out = [emit_report(r, "json") for _, r in (execute(args), execute(args)) if r is not None]
            c.expect(len(set(out)) <= 1, f"{path.name} differs between runs")
