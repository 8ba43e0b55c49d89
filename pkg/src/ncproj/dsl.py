"""Line-oriented DSL for presentations, morphisms, modules and Ore data.

Presentation files::

    field Q            # or: field F 7
    gen x 1
    gen y 1
    rel y*x - 2*x*y

Statements end at a newline or ``;``; ``#`` starts a comment.  Polynomials
use ``*`` (noncommutative, left to right), ``+``, ``-``, parentheses and
rational literals ``a/b``.  Morphism files hold ``source <path>``,
``target <path>`` and one ``map <gen> -> <poly>`` per source generator.
Module files hold ``algebra <path>``, ``gen <name> <degree>`` and
``rel <element>`` where each term of an element is a module generator
followed by algebra letters (``g1*x - g2*y``).  Ore files hold
``base <path>``, ``degree <n>``, optional ``var <name>`` and
``sigma <gen> -> <poly>`` / ``delta <gen> -> <poly>`` lines.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .free import FreeAlgebra, FreePoly, GeneratorInfo, Presentation, format_poly
from .linalg import GF, QQ, Field

IDENT = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")
_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op>->|[-+*/()]))"
)


@dataclass
class Statement:
    keyword: str
    args: str
    line: int
    column: int  # 1-based column where ``args`` starts


def split_statements(text: str) -> list[Statement]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        pos = 0
        for chunk in line.split(";"):
            start = pos
            pos += len(chunk) + 1
            stripped = chunk.strip()
            if not stripped:
                continue
            lead = len(chunk) - len(chunk.lstrip())
            m = re.match(r"(\S+)\s*", stripped)
            kw = m.group(1)
            out.append(Statement(kw, stripped[m.end():].rstrip(), lineno, start + lead + m.end() + 1))
    return out


def _tokenize(text: str, line: int, column: int) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip()) if text[pos:].strip() else pos
            raise ParseError(f"unexpected character {text[bad]!r}", line, column + bad)
        kind = m.lastgroup
        val = m.group(kind)
        toks.append((kind, val, column + m.start(kind)))
        pos = m.end()
    return toks


class _PolyParser:
    def __init__(self, text: str, free: FreeAlgebra, line: int, column: int):
        self.toks = _tokenize(text, line, column)
        self.i = 0
        self.free = free
        self.line = line
        self.end_col = column + len(text)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, self.end_col)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def error(self, msg, col=None):
        if col is None:
            col = self.peek()[2]
        raise ParseError(msg, self.line, col)

    def parse(self) -> FreePoly:
        p = self.expr()
        if self.i < len(self.toks):
            self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> FreePoly:
        sign = 1
        kind, val, _ = self.peek()
        if val in ("+", "-"):
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term() * sign
        while True:
            kind, val, _ = self.peek()
            if val == "+":
                self.take()
                acc = acc + self.term()
            elif val == "-":
                self.take()
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> FreePoly:
        acc = self.factor()
        while self.peek()[1] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> FreePoly:
        kind, val, col = self.take()
        if kind is None:
            self.error("unexpected end of polynomial", col)
        if kind == "num":
            num = int(val)
            if self.peek()[1] == "/":
                self.take()
                k2, v2, c2 = self.take()
                if k2 != "num":
                    self.error("expected denominator after '/'", c2)
                if int(v2) == 0:
                    self.error("zero denominator", c2)
                c = Fraction(num, int(v2))
            else:
                c = Fraction(num)
            try:
                return self.free.one() * self.free.field(c)
            except ZeroDivisionError:
                self.error(f"literal {val} not defined in {self.free.field.tag}", col)
        if kind == "ident":
            try:
                return self.free.gen(val)
            except KeyError:
                self.error(f"unknown generator {val!r}", col)
        if val == "(":
            inner = self.expr()
            k2, v2, c2 = self.take()
            if v2 != ")":
                self.error("expected ')'", c2)
            return inner
        if val == "-":
            return -self.factor()
        self.error(f"unexpected token {val!r}", col)


def parse_polynomial(text: str, free: FreeAlgebra, line: int = 1, column: int = 1) -> FreePoly:
    return _PolyParser(text, free, line, column).parse()


def _parse_field(st: Statement) -> Field:
    parts = st.args.split()
    if parts == ["Q"]:
        return QQ
    if len(parts) == 2 and parts[0] == "F" and parts[1].isdigit():
        try:
            return GF(int(parts[1]))
        except ValueError as exc:
            raise ParseError(str(exc), st.line, st.column) from None
    raise ParseError(f"bad field declaration {st.args!r}", st.line, st.column)


def _parse_gen(st: Statement, allow_negative: bool = False) -> GeneratorInfo:
    parts = st.args.split()
    if len(parts) != 2 or not IDENT.fullmatch(parts[0]):
        raise ParseError("expected 'gen <name> <weight>'", st.line, st.column)
    try:
        w = int(parts[1])
    except ValueError:
        raise ParseError(f"bad weight {parts[1]!r}", st.line, st.column) from None
    if w < 0 and not allow_negative:
        raise ParseError(f"negative weight {w}", st.line, st.column)
    return GeneratorInfo(parts[0], w)


def parse_presentation(text: str) -> Presentation:
    """Parse presentation DSL text into a validated :class:`Presentation`."""
    fld: Field | None = None
    gens: list[GeneratorInfo] = []
    rel_stmts: list[Statement] = []
    for st in split_statements(text):
        if st.keyword == "field":
            if fld is not None:
                raise ParseError("field declared twice", st.line, st.column)
            fld = _parse_field(st)
        elif st.keyword == "gen":
            if rel_stmts:
                raise ParseError("generators must precede relations", st.line, st.column)
            gens.append(_parse_gen(st))
        elif st.keyword == "rel":
            rel_stmts.append(st)
        else:
            raise ParseError(f"unknown statement {st.keyword!r}", st.line, st.column - len(st.keyword) - 1)
    if fld is None:
        fld = QQ
    free = FreeAlgebra(fld, gens)  # raises ZeroWeight / DuplicateGenerator
    rels = [parse_polynomial(st.args, free, st.line, st.column) for st in rel_stmts]
    return Presentation(fld, gens, rels)


def format_presentation(p: Presentation) -> str:
    lines = [f"field {p.field.tag}"]
    lines += [f"gen {g.name} {g.weight}" for g in p.generators]
    lines += [f"rel {format_poly(r)}" for r in p.relations]
    return "\n".join(lines) + "\n"


def load_presentation(path) -> Presentation:
    return parse_presentation(Path(path).read_text())


# ---------------------------------------------------------------------------
# auxiliary file kinds; polynomials stay textual until the algebras exist


@dataclass
class PolyText:
    text: str
    line: int
    column: int

    def parse(self, free: FreeAlgebra) -> FreePoly:
        return parse_polynomial(self.text, free, self.line, self.column)


@dataclass
class MorphismSpec:
    source: Path
    target: Path
    images: dict[str, PolyText] = dc_field(default_factory=dict)


@dataclass
class ModuleSpec:
    algebra: Path | None
    generators: list[GeneratorInfo] = dc_field(default_factory=list)
    relations: list[PolyText] = dc_field(default_factory=list)


@dataclass
class OreSpec:
    base: Path
    degree: int
    var: str = "t"
    sigma: dict[str, PolyText] = dc_field(default_factory=dict)
    delta: dict[str, PolyText] = dc_field(default_factory=dict)


def _arrow(st: Statement) -> tuple[str, PolyText]:
    m = re.match(r"([a-zA-Z][a-zA-Z0-9_]*)\s*->\s*", st.args)
    if not m:
        raise ParseError("expected '<gen> -> <polynomial>'", st.line, st.column)
    return m.group(1), PolyText(st.args[m.end():], st.line, st.column + m.end())


def _path(st: Statement, base: Path) -> Path:
    if not st.args:
        raise ParseError(f"{st.keyword} needs a path", st.line, st.column)
    p = Path(st.args)
    return p if p.is_absolute() else base / p


def parse_morphism(text: str, base_dir: Path = Path(".")) -> MorphismSpec:
    src = tgt = None
    images: dict[str, PolyText] = {}
    for st in split_statements(text):
        if st.keyword == "source":
            src = _path(st, base_dir)
        elif st.keyword == "target":
            tgt = _path(st, base_dir)
        elif st.keyword == "map":
            name, poly = _arrow(st)
            if name in images:
                raise ParseError(f"generator {name!r} mapped twice", st.line, st.column)
            images[name] = poly
        else:
            raise ParseError(f"unknown statement {st.keyword!r}", st.line, st.column)
    if src is None or tgt is None:
        raise ParseError("morphism file needs 'source' and 'target'", 1, 1)
    return MorphismSpec(src, tgt, images)


def parse_module(text: str, base_dir: Path = Path(".")) -> ModuleSpec:
    spec = ModuleSpec(None)
    for st in split_statements(text):
        if st.keyword == "algebra":
            spec.algebra = _path(st, base_dir)
        elif st.keyword == "gen":
            spec.generators.append(_parse_gen(st, allow_negative=True))
        elif st.keyword == "rel":
            spec.relations.append(PolyText(st.args, st.line, st.column))
        else:
            raise ParseError(f"unknown statement {st.keyword!r}", st.line, st.column)
    return spec


def parse_ore(text: str, base_dir: Path = Path(".")) -> OreSpec:
    base = None
    degree = None
    var = "t"
    sigma: dict[str, PolyText] = {}
    delta: dict[str, PolyText] = {}
    for st in split_statements(text):
        if st.keyword == "base":
            base = _path(st, base_dir)
        elif st.keyword == "degree":
            try:
                degree = int(st.args)
            except ValueError:
                raise ParseError(f"bad degree {st.args!r}", st.line, st.column) from None
        elif st.keyword == "var":
            if not IDENT.fullmatch(st.args):
                raise ParseError(f"bad variable name {st.args!r}", st.line, st.column)
            var = st.args
        elif st.keyword in ("sigma", "delta"):
            name, poly = _arrow(st)
            (sigma if st.keyword == "sigma" else delta)[name] = poly
        else:
            raise ParseError(f"unknown statement {st.keyword!r}", st.line, st.column)
    if base is None or degree is None:
        raise ParseError("Ore file needs 'base' and 'degree'", 1, 1)
    return OreSpec(base, degree, var, sigma, delta)
