"""``ncproj``: command-line driver.

Every command needs an explicit truncation bound ``-D`` and prints a report
(``--format json|csv|text``).  Exit status: 0 when every checked property
holds, 1 when one fails, 2 for usage, parse and window errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable

from . import ideals as ID
from .bimodules import adjunction_check, bar_tensor, coinduce_along, watts_bimodule
from .dsl import parse_polynomial
from .errors import (
    NcprojError,
    NotADerivation,
    NotAnAutomorphism,
    ParseError,
    WindowError,
    WindowInsufficient,
)
from .groebner import GradedAlgebra
from .loaders import load_algebra, load_morphism, load_ore, module_from_spec
from .modules import graded_hom, induce_along, regular_module, restrict_along
from .ore import ore_extension, ore_hilbert
from .report import FORMATS, Report, emit_report
from .veronese import (
    check_lemma_I,
    ideal_family,
    min_veronese_gen1,
    projector,
    tails_window_equal,
    verevkin_defect,
    veronese_algebra,
    veronese_coinduce,
    veronese_pullback,
    veronese_pushforward,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("-D", dest="D", type=_positive, required=True, help="truncation bound")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ncproj", description="Degree-truncated computations in graded algebras.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_, *args):
        p = sub.add_parser(name, help=help_)
        for a in args:
            p.add_argument(a, help=f"{a} file")
        _add_common(p)
        return p

    p = cmd("hilbert", "Hilbert function through degree D", "algebra")
    p.add_argument("--module", default=None, help="report dims of this module instead")
    p = cmd("base-change", "restriction, induction and coinduction along a morphism", "morphism")
    p.add_argument("--module", default="k", help="module over the morphism source (default k)")
    p = cmd("veronese-functors", "f_*, f^* and f^! for the Veronese embedding", "algebra")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--module", default="A")
    p = cmd("veronese", "presentation of the Veronese subalgebra", "algebra")
    p.add_argument("-n", type=_positive, required=True)
    p = cmd("ideal-family", "the right ideals I_r and their intersection I", "algebra")
    p.add_argument("-n", type=_positive, required=True)
    p = cmd("check-lemma-i", "degree-wise check of I^{2n} inside I^(n) A", "algebra")
    p.add_argument("-n", type=_positive, required=True)
    p = cmd("check-affine", "smallest n with B phi(m)^n inside phi(m) B", "morphism")
    p.add_argument("--nmax", type=_positive, default=4)
    p = cmd("largest-twosided", "largest two-sided ideal inside a right ideal", "algebra")
    p.add_argument("--gen", action="append", required=True, help="right ideal generator")
    p = cmd("closed-immersion", "functor triple for A -> A/J", "algebra")
    p.add_argument("--ideal", action="append", required=True, help="generator of J")
    p.add_argument("--module", default="A", help="module expression (default A)")
    cmd("ore-extend", "graded Ore extension and its Hilbert check", "ore")
    p = cmd("projector", "degree-class projectors p_r", "algebra")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--module", default="A")
    p = cmd("tails-equal", "window-level isomorphism of truncations", "algebra")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--from", dest="start", type=int, required=True)
    p = cmd("verevkin", "kernel and cokernel of f^* f_* M -> M", "algebra")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--module", default="A")
    p = cmd("min-veronese", "smallest d with A^(d) generated in degree one", "algebra")
    p.add_argument("--max", dest="dmax", type=_positive, required=True)
    p = cmd("adjunction-check", "Hom(L (x) M, N) versus Hom(L, Hom_(M, N))", "morphism")
    p.add_argument("--left", default="A", help="module over the morphism target")
    p.add_argument("--right", default="A", help="module over the morphism source")
    p = cmd("watts", "bigraded bimodule of restriction along a morphism", "morphism")
    p.add_argument("--rows", default="-2:2", help="p range a:b")
    p.add_argument("--cols", default="0:4", help="q range a:b")
    p = sub.add_parser("replay", help="replay scenario files")
    p.add_argument("paths", nargs="+", help="scenario files or directories")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("-D", dest="D", type=_positive, default=None,
                   help="unused; scenarios carry their own bounds")
    p.add_argument("--seed", type=int, default=0)
    return ap


def _range(text: str) -> range:
    a, b = text.split(":")
    return range(int(a), int(b) + 1)


def _poly(text: str, a: GradedAlgebra):
    return parse_polynomial(text, a.free)


# ---------------------------------------------------------------------------
# commands; each fills a Report and returns nothing


def c_hilbert(args, r: Report):
    a = load_algebra(args.algebra, args.D)
    if args.module is not None:
        m = module_from_spec(args.module, a, Path(args.algebra).parent)
        _module_facts(r, "module", m)
        t = r.table("module dims", ["degree", "dim"], [m.lo, m.hi])
        for e in range(m.lo, m.hi + 1):
            t.add(e, m.dim(e))
        return
    h = a.hilbert()
    r.fact("hilbert", h)
    r.fact("groebner_basis", [str(g) for g in a.gb.elements])
    t = r.table("hilbert", ["degree", "dim"], [0, args.D])
    for i, d in enumerate(h):
        t.add(i, d)


def _support(m) -> list[int] | None:
    nz = [e for e in range(m.lo, m.hi + 1) if m.dim(e)]
    return [nz[0], nz[-1]] if nz else None


def _module_facts(r: Report, label: str, m) -> None:
    r.fact(f"{label}_window", [m.lo, m.hi])
    r.fact(f"{label}_dims", m.dims())
    r.fact(f"{label}_support", _support(m))


def _coinduce_facts(r: Report, label: str, build) -> None:
    try:
        h = build()
    except WindowInsufficient as exc:
        r.fact(f"{label}_window", None)
        r.witnesses.append(f"{label}: {exc}")
        return
    _module_facts(r, label, h)
    # finite on the window: the support stops before the top of the window
    sup = _support(h)
    r.fact(f"{label}_finite", sup is None or sup[1] < h.hi)


def c_base_change(args, r: Report):
    phi = load_morphism(args.morphism, args.D)
    n = module_from_spec(args.module, phi.source, Path(args.morphism).parent)
    _module_facts(r, "module", n)
    _module_facts(r, "induce", induce_along(phi, n))
    r.fact("fiber_dims", ID.finite_module_check(phi, args.D).quotient_dims)
    b = regular_module(phi.target)
    res = restrict_along(phi, b)
    bar = bar_tensor(b, watts_bimodule(phi))
    _module_facts(r, "restrict_B", res)
    _module_facts(r, "bar_tensor_B", bar)
    top = min(res.hi, bar.hi)
    same = [res.dim(e) for e in range(res.lo, top + 1)] == [bar.dim(e) for e in range(res.lo, top + 1)]
    r.fact("bar_tensor_matches_restriction", same)
    if not same:
        r.fail("L (x) M differs from the functor on L = B")
    _coinduce_facts(r, "coinduce", lambda: coinduce_along(phi, n))


def c_veronese_functors(args, r: Report):
    a = load_algebra(args.algebra, args.D)
    v = veronese_algebra(a, args.n, args.D)
    m = module_from_spec(args.module, a, Path(args.algebra).parent)
    _module_facts(r, "module", m)
    pushed = veronese_pushforward(m, v)
    _module_facts(r, "pushforward", pushed)
    back = veronese_pullback(pushed, v)
    _module_facts(r, "pullback_pushforward", back)
    again = veronese_pushforward(back, v)
    lo, hi = max(pushed.lo, again.lo), min(pushed.hi, again.hi)
    unit = all(again.dim(e) == pushed.dim(e) for e in range(lo, hi + 1))
    r.fact("unit_window", [lo, hi])
    r.fact("unit_identity", unit)
    if not unit:
        r.fail("f_* f^* N and N differ in dimension")
    _coinduce_facts(r, "coinduce_pushforward", lambda: veronese_coinduce(pushed, v))


def c_veronese(args, r: Report):
    a = load_algebra(args.algebra, args.D)
    v = veronese_algebra(a, args.n, args.D)
    va = v.algebra
    r.fact("generators", [f"{g.name}:{g.weight} -> {img}"
                          for g, img in zip(va.presentation.generators, v.generator_images)])
    r.fact("relations", [str(p) for p in va.presentation.relations])
    r.fact("relation_degrees", v.relation_degrees)
    r.fact("searched_through", v.bound)
    r.fact("hilbert", va.hilbert())
    t = r.table("hilbert identity", ["i", "dim A^(n)_i", "dim A_ni", "equal"], [0, v.bound])
    for i in range(v.bound + 1):
        ok = va.dim(i) == a.dim(args.n * i)
        t.add(i, va.dim(i), a.dim(args.n * i), ok)
        if not ok:
            r.fail(f"degree {i}")


def c_ideal_family(args, r: Report):
    a = load_algebra(args.algebra, args.D)
    fam = ideal_family(a, args.n, args.D)
    for k in range(1, args.n + 1):
        r.fact(f"I_{k}", fam.I(k).describe(ID.RIGHT))
    r.fact("I", fam.intersection.describe(ID.TWO_SIDED))
    r.fact("I_two_sided", fam.twosided)
    cols = ["degree"] + [f"dim I_{k}" for k in range(1, args.n + 1)] + ["dim I", "dim A"]
    t = r.table("ideal dims", cols, [0, args.D])
    for e in range(args.D + 1):
        t.add(e, *[fam.I(k).dim(e) for k in range(1, args.n + 1)], fam.intersection.dim(e), a.dim(e))
    if not fam.twosided:
        r.fail("I is not two-sided on the window")


def c_lemma(args, r: Report):
    a = load_algebra(args.algebra, args.D)
    rep = check_lemma_I(a, args.n, args.D)
    r.fact("trivial", rep.trivial)
    t = r.table("containment", ["degree", "dim I^2n", "dim I^(n)A", "pass"], [0, args.D])
    for e in range(args.D + 1):
        t.add(e, rep.power_dims[e], rep.target_dims[e], rep.passed[e])
        if not rep.passed[e]:
            r.fail(f"degree {e}")


def c_affine(args, r: Report):
    phi = load_morphism(args.morphism, args.D)
    res = ID.check_affine_hypothesis(phi, args.nmax, args.D)
    r.fact("n", res.n)
    r.fact("certified_upto", res.certified_upto)
    if res.n is None:
        r.fail(f"degree {res.witness_degree}: {res.witness}")


def c_largest(args, r: Report):
    a = load_algebra(args.algebra, args.D)
    k = ID.GradedIdeal.generated_by(a, [_poly(g, a) for g in args.gen], ID.RIGHT, name="K")
    ok, wit = ID.is_twosided(k, args.D)
    big = ID.largest_twosided_inside(k, args.D)
    r.fact("K_two_sided", ok)
    if wit is not None:
        r.witnesses.append(str(wit))
    r.fact("stable_upto", big.exact_upto)
    t = r.table("dims", ["degree", "dim K", "dim largest"], [0, args.D])
    for e in range(args.D + 1):
        t.add(e, k.dim(e), big.dim(e))
    if not k.contains_ideal(big) or not ID.is_twosided(big, args.D)[0]:
        r.fail("largest two-sided ideal check failed")


def c_closed(args, r: Report):
    a = load_algebra(args.algebra, args.D)
    j = ID.GradedIdeal.generated_by(a, [_poly(g, a) for g in args.ideal], ID.TWO_SIDED, name="J")
    q = ID.quotient_algebra(j)
    m = module_from_spec(args.module, a, Path(args.algebra).parent)
    mj = ID.module_times_ideal(m, j)
    pulled = ID.quotient_pullback(j, m, q)
    inflated = ID.quotient_inflate(j, pulled)
    again = ID.quotient_pullback(j, inflated, q)
    tors = ID.torsion_submodule(j, inflated, q)
    r.fact("quotient_hilbert", q.hilbert())
    t = r.table("dims", ["degree", "M", "MJ", "i^*M", "i^*i_*i^*M", "i^!i_*i^*M"], [m.lo, tors.hi])
    for e in range(m.lo, m.hi + 1):
        tor = tors.dim(e) if e <= tors.hi else None
        t.add(e, m.dim(e), mj[e].dim, pulled.dim(e), again.dim(e), tor)
        if pulled.dim(e) + mj[e].dim != m.dim(e):
            r.fail(f"dim(i^*M) + dim(MJ) != dim M in degree {e}")
        if again.dim(e) != pulled.dim(e):
            r.fail(f"counit not an isomorphism in degree {e}")
        if tor is not None and tor != pulled.dim(e):
            r.fail(f"torsion of an inflated module is not everything in degree {e}")


def c_ore(args, r: Report):
    o = load_ore(args.ore, args.D)
    r.fact("base_hilbert", o.base.hilbert(args.D))
    try:
        s = ore_extension(o, args.D)
    except (NotADerivation, NotAnAutomorphism) as exc:
        r.fact("error", type(exc).__name__)
        r.fail(str(exc))
        return
    want = ore_hilbert(o.base.hilbert(args.D), o.n, args.D)
    r.fact("relations", [str(p) for p in s.presentation.relations])
    r.fact("hilbert", s.hilbert())
    t = r.table("convolution", ["degree", "dim S", "sum_k dim R_(i-kn)"], [0, args.D])
    for i in range(args.D + 1):
        t.add(i, s.dim(i), want[i])


def c_projector(args, r: Report):
    a = load_algebra(args.algebra, args.D)
    m = module_from_spec(args.module, a, Path(args.algebra).parent)
    parts = [projector(m, args.n, k) for k in range(args.n)]
    cols = ["degree", "dim M"] + [f"p_{k}" for k in range(args.n)]
    t = r.table("projectors", cols, [m.lo, m.hi])
    for e in range(m.lo, m.hi + 1):
        dims = [p.dim(e) for p in parts]
        t.add(e, m.dim(e), *dims)
        if sum(dims) != m.dim(e):
            r.fail(f"projectors do not sum to M in degree {e}")
    idem = all(projector(p, args.n, k).dims() == p.dims() for k, p in enumerate(parts))
    orth = all(projector(p, args.n, k2).is_zero_on_window()
               for k, p in enumerate(parts) for k2 in range(args.n) if k2 != k)
    homs = all(graded_hom(parts[k], parts[k2], 0).dim == 0
               for k in range(args.n) for k2 in range(args.n)
               if k != k2 and parts[k].presentation.degrees)
    r.fact("idempotent", idem)
    r.fact("orthogonal", orth)
    r.fact("cross_homs_vanish", homs)
    if not (idem and orth and homs):
        r.fail("projector identities")


def c_tails(args, r: Report):
    a = load_algebra(args.algebra, args.D)
    base = Path(args.algebra).parent
    m = module_from_spec(args.left, a, base)
    n = module_from_spec(args.right, a, base)
    hi = min(m.hi, n.hi)
    eq = tails_window_equal(m, n, args.start, hi, seed=args.seed)
    r.fact("window", [args.start, hi])
    r.fact("equal", eq)
    r.fact("status", "window-certified")


def c_verevkin(args, r: Report):
    a = load_algebra(args.algebra, args.D)
    m = module_from_spec(args.module, a, Path(args.algebra).parent)
    rep = verevkin_defect(a, args.n, m, args.D)
    r.fact("kernel_killed_by_I", rep.kernel_killed)
    r.fact("cokernel_killed_by_I", rep.cokernel_killed)
    t = r.table("defect", ["degree", "dim ker", "dim coker"], list(rep.window))
    for e in sorted(rep.kernel_dims):
        t.add(e, rep.kernel_dims[e], rep.cokernel_dims[e])
    for f in rep.failures:
        r.fail(f)


def c_minver(args, r: Report):
    a = load_algebra(args.algebra, args.D)
    res = min_veronese_gen1(a, args.dmax)
    r.fact("d", res.d)
    t = r.table("certified", ["d", "top Veronese degree"])
    for d, top in res.certified.items():
        t.add(d, top)
    if res.d is None:
        r.fail(f"no d <= {args.dmax} passes within D = {args.D}")


def c_adjunction(args, r: Report):
    phi = load_morphism(args.morphism, args.D)
    base = Path(args.morphism).parent
    L = module_from_spec(args.left, phi.target, base)
    N = module_from_spec(args.right, phi.source, base)
    s = adjunction_check(L, watts_bimodule(phi), N)
    r.fact("lhs", s.lhs)
    r.fact("rhs", s.rhs)
    r.fact("exact", s.exact)
    if not s.ok:
        r.fail(f"{s.lhs} != {s.rhs}")


def c_watts(args, r: Report):
    phi = load_morphism(args.morphism, args.D)
    W = watts_bimodule(phi)
    rows, cols = _range(args.rows), _range(args.cols)
    t = r.table("dims pM_q", ["p"] + [f"q={q}" for q in cols])
    for p in rows:
        row = W.row(p)
        t.add(p, *[row.dim(q) if q <= row.hi else None for q in cols])
    bad = W.check_bimodule(rows, [q for q in cols])
    r.fact("actions_commute", not bad)
    if bad:
        r.fail(f"left and right actions disagree at {bad[0]}")


COMMANDS: dict[str, Callable] = {
    "hilbert": c_hilbert,
    "base-change": c_base_change,
    "veronese-functors": c_veronese_functors,
    "veronese": c_veronese,
    "ideal-family": c_ideal_family,
    "check-lemma-i": c_lemma,
    "check-affine": c_affine,
    "largest-twosided": c_largest,
    "closed-immersion": c_closed,
    "ore-extend": c_ore,
    "projector": c_projector,
    "tails-equal": c_tails,
    "verevkin": c_verevkin,
    "min-veronese": c_minver,
    "adjunction-check": c_adjunction,
    "watts": c_watts,
}


# ---------------------------------------------------------------------------
# scenarios


def _scenario_files(paths) -> list[Path]:
    out = []
    for p in map(Path, paths):
        out.extend(sorted(p.glob("*.json")) if p.is_dir() else [p])
    return out


def _matches(expected, actual) -> bool:
    return json.dumps(expected, sort_keys=True) == json.dumps(actual, sort_keys=True)


def run_scenario(path: Path) -> tuple[str, bool, str, bytes]:
    """Run one scenario file; returns (name, ok, detail, report bytes)."""
    spec = json.loads(path.read_text())
    argv = [str(path.parent / a) if a.startswith("@") is False and _is_file_arg(path.parent, a) else a
            for a in spec["argv"]]
    code, rep = execute(argv)
    exp = spec.get("expect", {})
    problems = []
    if code != exp.get("exit", 0):
        problems.append(f"exit {code} != {exp.get('exit', 0)}")
    for k, v in exp.get("facts", {}).items():
        if rep is None or not _matches(v, rep.facts.get(k)):
            got = None if rep is None else rep.facts.get(k)
            problems.append(f"{k}: expected {v!r}, got {got!r}")
    data = emit_report(rep, "json") if rep is not None else b""
    return spec.get("name", path.stem), not problems, "; ".join(problems), data


def _is_file_arg(base: Path, a: str) -> bool:
    return not a.startswith("-") and (base / a).is_file()


def c_replay(args, r: Report):
    files = _scenario_files(args.paths)
    raw = os.environ.get("NCPROJ_THREADS", "1") or "1"
    try:
        threads = int(raw)
    except ValueError:
        raise UsageError(f"NCPROJ_THREADS must be a positive integer, got {raw!r}") from None
    if threads < 1:
        raise UsageError("NCPROJ_THREADS must be >= 1")
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(run_scenario, files))
    t = r.table("scenarios", ["scenario", "pass", "detail"])
    for name, ok, detail, _ in results:
        t.add(name, ok, detail)
        if not ok:
            r.fail(f"{name}: {detail}")
    r.fact("count", len(results))
    r.fact("passed", sum(1 for _, ok, _, _ in results if ok))


# ---------------------------------------------------------------------------


def _display_argv(argv: list[str]) -> list[str]:
    """Argument vector with file paths reduced to their names (stable across checkouts)."""
    out = []
    for a in argv:
        p = Path(a)
        out.append(p.name if not a.startswith("-") and p.suffix in {".alg", ".map", ".mod", ".ore", ".json"} else a)
    return out


def execute(argv: list[str]) -> tuple[int, Report | None]:
    """Run a command; returns the exit status and the report (``None`` on usage errors)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return EXIT_USAGE, _error_report(argv, "usage", str(exc))
    rep = Report(args.command, _display_argv(list(argv)), args.seed, args.D)
    try:
        if args.command == "replay":
            c_replay(args, rep)
        else:
            COMMANDS[args.command](args, rep)
    except ParseError as exc:
        return EXIT_USAGE, _error_report(argv, args.command, f"parse error: {exc}")
    except WindowError as exc:
        return EXIT_USAGE, _error_report(argv, args.command, f"window error: {exc}")
    except (UsageError, OSError) as exc:
        return EXIT_USAGE, _error_report(argv, args.command, str(exc))
    except NcprojError as exc:
        return EXIT_USAGE, _error_report(argv, args.command, f"{type(exc).__name__}: {exc}")
    return (EXIT_PASS if rep.passed else EXIT_FAIL), rep


def _error_report(argv, command, message) -> Report:
    r = Report(command, _display_argv(list(argv)))
    r.verdict = "error"
    r.witnesses.append(message)
    return r


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    fmt = "text"
    if "--format" in argv:
        i = argv.index("--format")
        if i + 1 < len(argv) and argv[i + 1] in FORMATS:
            fmt = argv[i + 1]
    code, rep = execute(argv)
    if rep is not None:
        if rep.verdict == "error":
            print(f"ncproj: {rep.witnesses[-1]}", file=err)
        out.write(emit_report(rep, fmt).decode())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
