"""Turn DSL files and short module expressions into library objects."""
from __future__ import annotations

import re
from pathlib import Path

from .dsl import load_presentation, parse_module, parse_morphism, parse_ore, parse_polynomial
from .errors import ParseError
from .free import FreeAlgebra, FreePoly, GeneratorInfo
from .groebner import GradedAlgebra
from .modules import GradedModule, direct_sum, present_module, regular_module, shift, truncate
from .morphism import AlgebraMorphism
from .ore import OreData

_cache: dict = {}


def load_algebra(path, D: int) -> GradedAlgebra:
    path = Path(path)
    key = (str(path.resolve()), path.stat().st_mtime_ns if path.exists() else 0, D)
    hit = _cache.get(key)
    if hit is None:
        hit = GradedAlgebra(load_presentation(path), D, name=path.stem)
        _cache[key] = hit
    return hit


def load_morphism(path, D: int) -> AlgebraMorphism:
    path = Path(path)
    spec = parse_morphism(path.read_text(), path.parent)
    src = load_algebra(spec.source, D)
    tgt = load_algebra(spec.target, D)
    images = []
    for name in src.names:
        if name not in spec.images:
            raise ParseError(f"no image given for generator {name!r}", 1, 1)
        images.append(spec.images[name].parse(tgt.free))
    extra = set(spec.images) - set(src.names)
    if extra:
        raise ParseError(f"unknown source generator {sorted(extra)[0]!r}", 1, 1)
    return AlgebraMorphism(src, tgt, images, name=path.stem)


def module_relations(text_polys, gens: list[GeneratorInfo], a: GradedAlgebra) -> list[list]:
    """Split ``g1*x - g2*y`` style elements into per-generator algebra polynomials."""
    names = [g.name for g in gens]
    clash = set(names) & set(a.names)
    if clash:
        raise ParseError(f"module generator {sorted(clash)[0]!r} clashes with an algebra letter", 1, 1)
    joint = FreeAlgebra(a.field, [GeneratorInfo(n, 1) for n in names] +
                        [GeneratorInfo(n, w) for n, w in zip(a.names, a.weights)])
    s = len(names)
    out = []
    for pt in text_polys:
        p = parse_polynomial(pt.text, joint, pt.line, pt.column)
        comps = [a.free.zero() for _ in range(s)]
        for w, c in p.terms.items():
            if not w or w[0] >= s or any(i < s for i in w[1:]):
                raise ParseError("each term must be one module generator followed by algebra letters",
                                 pt.line, pt.column)
            comps[w[0]] = comps[w[0]] + FreePoly(a.free, {tuple(i - s for i in w[1:]): c})
        out.append(comps)
    return out


def load_module(path, D: int, algebra: GradedAlgebra | None = None) -> GradedModule:
    path = Path(path)
    spec = parse_module(path.read_text(), path.parent)
    if algebra is None:
        if spec.algebra is None:
            raise ParseError("module file needs an 'algebra' line", 1, 1)
        algebra = load_algebra(spec.algebra, D)
    rels = module_relations(spec.relations, spec.generators, algebra)
    return present_module(algebra, [g.weight for g in spec.generators], rels, name=path.stem)


_TERM = re.compile(r"^(A|m|k)(?:\((-?\d+)\))?$")


def module_from_spec(spec: str, a: GradedAlgebra, base: Path = Path(".")) -> GradedModule:
    """``A``, ``m`` (augmentation ideal), ``k`` (``A/m``), each optionally
    shifted as ``A(p)``; a ``.mod`` path; or ``+`` sums of these."""
    parts = [p.strip() for p in spec.split("+")]
    mods = []
    for part in parts:
        m = _TERM.match(part)
        if m:
            p = int(m.group(2) or 0)
            kind = m.group(1)
            if kind == "k":
                mod = present_module(a, [0], [[a.free.gen(i)] for i in range(a.ngens)])
            else:
                reg = regular_module(a)
                mod = truncate(reg, 1) if kind == "m" else reg
            mod = shift(mod, p) if p else mod
            mod.name = part
            mods.append(mod)
            continue
        path = Path(part)
        if not path.is_absolute():
            path = base / path
        if not path.exists():
            raise ParseError(f"unknown module {part!r}", 1, 1)
        mods.append(load_module(path, a.D, algebra=a))
    out = mods[0]
    for extra in mods[1:]:
        out = direct_sum(out, extra)
    out.name = spec
    return out


def load_ore(path, D: int) -> OreData:
    path = Path(path)
    spec = parse_ore(path.read_text(), path.parent)
    # delta raises degrees by n, so the base must be certified n degrees higher
    base = load_algebra(spec.base, D + spec.degree)
    sigma, delta = [], []
    for k, name in enumerate(base.names):
        sigma.append(spec.sigma[name].parse(base.free) if name in spec.sigma else base.free.gen(k))
        delta.append(spec.delta[name].parse(base.free) if name in spec.delta else base.free.zero())
    return OreData(base, sigma, delta, spec.degree, spec.var)
