"""Machine-readable run reports (schema 1) in JSON, CSV or plain text.

Numbers are exact: rationals appear as ``"p/q"`` strings, integers as JSON
integers.  Field order is fixed so identical runs give identical bytes.
"""
from __future__ import annotations

import csv
import io
import json
import shlex
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .linalg import ModP

SCHEMA = 1
FORMATS = ("json", "csv", "text")


def exact(value: Any) -> Any:
    """JSON-safe exact form of a value (recursively)."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, ModP):
        return value.value
    if isinstance(value, dict):
        return {str(k): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    return str(value)


@dataclass
class Table:
    """A per-degree (or per-sample) table; ``certified`` is the degree range it covers."""

    name: str
    columns: list[str]
    rows: list[list] = field(default_factory=list)
    certified: list[int] | None = None

    def add(self, *values) -> None:
        self.rows.append([exact(v) for v in values])

    def to_dict(self) -> dict:
        return {"name": self.name, "certified": self.certified, "columns": list(self.columns),
                "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, d: dict) -> "Table":
        return cls(d["name"], list(d["columns"]), [list(r) for r in d["rows"]], d.get("certified"))


@dataclass
class Report:
    command: str
    argv: list[str] = field(default_factory=list)
    seed: int | None = None
    bound: int | None = None
    verdict: str = "pass"
    facts: dict[str, Any] = field(default_factory=dict)
    tables: list[Table] = field(default_factory=list)
    witnesses: list[str] = field(default_factory=list)
    schema: int = SCHEMA

    def fact(self, key: str, value: Any) -> None:
        self.facts[key] = exact(value)

    def table(self, name: str, columns: list[str], certified=None) -> Table:
        t = Table(name, list(columns), [], list(certified) if certified is not None else None)
        self.tables.append(t)
        return t

    def fail(self, witness: str | None = None) -> None:
        self.verdict = "fail"
        if witness:
            self.witnesses.append(witness)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def command_line(self) -> str:
        return " ".join(shlex.quote(a) for a in ["ncproj", *self.argv])

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "command": self.command,
            "command_line": self.command_line,
            "argv": list(self.argv),
            "seed": self.seed,
            "bound": self.bound,
            "verdict": self.verdict,
            "facts": dict(self.facts),
            "tables": [t.to_dict() for t in self.tables],
            "witnesses": list(self.witnesses),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["command"], list(d.get("argv", [])), d.get("seed"), d.get("bound"),
                   d.get("verdict", "pass"), dict(d.get("facts", {})),
                   [Table.from_dict(t) for t in d.get("tables", [])],
                   list(d.get("witnesses", [])), d.get("schema", SCHEMA))


def emit_report(r: Report, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(r.to_dict(), indent=2, ensure_ascii=False) + "\n").encode()
    if fmt == "csv":
        return _to_csv(r).encode()
    if fmt == "text":
        return _to_text(r).encode()
    raise ValueError(f"unknown format {fmt!r}")


def parse_report(data: bytes | str) -> Report:
    if isinstance(data, bytes):
        data = data.decode()
    return Report.from_dict(json.loads(data))


def _cell(v) -> str:
    if isinstance(v, (list, dict)):
        return json.dumps(v, ensure_ascii=False)
    if v is None:
        return ""
    return str(v).lower() if isinstance(v, bool) else str(v)


def _to_csv(r: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["section", "key", "value"])
    w.writerow(["meta", "schema", r.schema])
    w.writerow(["meta", "command_line", r.command_line])
    w.writerow(["meta", "seed", _cell(r.seed)])
    w.writerow(["meta", "bound", _cell(r.bound)])
    w.writerow(["meta", "verdict", r.verdict])
    for k, v in r.facts.items():
        w.writerow(["fact", k, _cell(v)])
    for x in r.witnesses:
        w.writerow(["witness", "", x])
    for t in r.tables:
        w.writerow([])
        w.writerow(["table:" + t.name, *t.columns])
        for row in t.rows:
            w.writerow([t.name, *[_cell(v) for v in row]])
    return buf.getvalue()


def csv_table_rows(text: str, name: str) -> list[list[str]]:
    """Rows of one table from CSV output."""
    return [row[1:] for row in csv.reader(io.StringIO(text)) if row and row[0] == name]


def _to_text(r: Report) -> str:
    lines = [f"{r.command_line}", f"verdict: {r.verdict}"]
    if r.bound is not None:
        lines.append(f"bound D = {r.bound}")
    if r.seed is not None:
        lines.append(f"seed = {r.seed}")
    for k, v in r.facts.items():
        if isinstance(v, list) and all(isinstance(x, (int, str)) for x in v):
            v = ", ".join(str(x) for x in v)
        lines.append(f"{k}: {v}")
    for x in r.witnesses:
        lines.append(f"witness: {x}")
    for t in r.tables:
        cert = f" (certified {t.certified[0]}..{t.certified[1]})" if t.certified else ""
        lines.append("")
        lines.append(f"[{t.name}]{cert}")
        cells = [t.columns] + [[_cell(v) for v in row] for row in t.rows]
        widths = [max(len(str(c[i])) for c in cells) for i in range(len(t.columns))]
        for c in cells:
            lines.append("  ".join(str(v).rjust(wd) for v, wd in zip(c, widths)).rstrip())
    return "\n".join(lines) + "\n"
