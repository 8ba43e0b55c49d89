"""Exact dense linear algebra over the rationals and prime fields.

Every degree-wise computation in ncproj ends up here.  Matrices act on row
vectors from the right (``v @ M``), so a matrix with ``r`` rows and ``c``
columns represents a linear map from a space of dimension ``r`` to one of
dimension ``c``.  Pivoting is deterministic: columns are scanned left to
right and the first row carrying a nonzero entry becomes the pivot row.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch

__all__ = [
    "Field",
    "ModP",
    "QQ",
    "GF",
    "Matrix",
    "RowSpace",
    "row_reduce",
    "kernel_basis",
    "left_kernel",
    "intersect_rowspaces",
    "rank",
    "right_inverse_rows",
]


class ModP:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} and F_{other.p} elements combined")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if self.value == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(o * pow(self.value, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return ModP(pow(self.value, -1, self.p), self.p) ** (-k)
        return ModP(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Field:
    """Coefficient field: the rationals (characteristic 0) or F_p."""

    __slots__ = ("characteristic", "zero", "one")

    def __init__(self, characteristic: int = 0):
        if characteristic and not _is_prime(characteristic):
            raise ValueError(f"{characteristic} is not prime")
        self.characteristic = characteristic
        self.zero = self(0)
        self.one = self(1)

    @property
    def tag(self) -> str:
        return "Q" if self.characteristic == 0 else f"F {self.characteristic}"

    def __call__(self, x):
        p = self.characteristic
        if p == 0:
            if isinstance(x, ModP):
                raise FieldMismatch("prime field element used over Q")
            if isinstance(x, str):
                return Fraction(x)
            return Fraction(x)
        if isinstance(x, ModP):
            if x.p != p:
                raise FieldMismatch(f"F_{x.p} element used over F_{p}")
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} vanishes in F_{p}")
            return ModP(x.numerator * pow(x.denominator, -1, p), p)
        return ModP(int(x), p)

    def owns(self, x) -> bool:
        if self.characteristic == 0:
            return isinstance(x, (Fraction, int)) and not isinstance(x, bool)
        return isinstance(x, ModP) and x.p == self.characteristic

    def format(self, x) -> str:
        """Exact text form: ``p/q`` for rationals, the residue for F_p."""
        return str(x)

    def random(self, rng, bound: int = 3, nonzero: bool = False):
        while True:
            v = self(rng.randint(-bound, bound))
            if v or not nonzero:
                return v

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)
_prime_fields: dict[int, Field] = {}


def GF(p: int) -> Field:
    if p not in _prime_fields:
        _prime_fields[p] = Field(p)
    return _prime_fields[p]


# ---------------------------------------------------------------------------
# vector helpers (plain lists of field elements)


def vec_is_zero(v: Sequence) -> bool:
    return not any(v)


def vec_add(u: Sequence, v: Sequence) -> list:
    return [a + b for a, b in zip(u, v)]


def vec_sub(u: Sequence, v: Sequence) -> list:
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v: Sequence) -> list:
    return [c * a for a in v]


def vec_mat(v: Sequence, rows: Sequence[Sequence], ncols: int, zero) -> list:
    """Row vector times matrix given as a row list."""
    out = [zero] * ncols
    for c, row in zip(v, rows):
        if c:
            for j, a in enumerate(row):
                if a:
                    out[j] += c * a
    return out


def _rref(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """In-place Gauss-Jordan; returns nonzero rref rows and pivot columns."""
    m = rows
    nrows = len(m)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        prow = m[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow = [a * inv if a else a for a in prow]
            m[r] = prow
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                row = m[i]
                f = row[c]
                if f:
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return m[:r], pivots


class Matrix:
    """Dense immutable matrix with entries in a single :class:`Field`."""

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field: Field, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(field(x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise DimensionMismatch("column count needed for a matrix without rows")
            ncols = len(data[0])
        for row in data:
            if len(row) != ncols:
                raise DimensionMismatch("ragged matrix rows")
        self.field = field
        self.nrows = len(data)
        self.ncols = ncols
        self._rows = data

    @classmethod
    def _trusted(cls, field: Field, rows, ncols: int) -> "Matrix":
        m = object.__new__(cls)
        m.field = field
        m._rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m._rows)
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls._trusted(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls._trusted(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_entries(cls, field: Field, nrows: int, ncols: int, entries: Sequence) -> "Matrix":
        if len(entries) != nrows * ncols:
            raise DimensionMismatch("entries length must equal rows*cols")
        return cls(field, [entries[i * ncols:(i + 1) * ncols] for i in range(nrows)], ncols)

    @property
    def rows(self) -> tuple[tuple, ...]:
        return self._rows

    @property
    def entries(self) -> tuple:
        return tuple(a for row in self._rows for a in row)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self._rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in row) for row in self._rows)
        return f"Matrix({self.nrows}x{self.ncols} over {self.field!r}: [{body}])"

    def _check(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        z = self.field.zero
        orows = other._rows
        out = [vec_mat(row, orows, other.ncols, z) for row in self._rows]
        return Matrix._trusted(self.field, out, other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix._trusted(
            self.field, [vec_add(a, b) for a, b in zip(self._rows, other._rows)], self.ncols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Matrix._trusted(
            self.field, [vec_sub(a, b) for a, b in zip(self._rows, other._rows)], self.ncols
        )

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(self.field, [[-a for a in r] for r in self._rows], self.ncols)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix._trusted(self.field, [vec_scale(c, r) for r in self._rows], self.ncols)

    @property
    def T(self) -> "Matrix":
        return Matrix._trusted(
            self.field, [list(col) for col in zip(*self._rows)] if self.nrows else
            [[] for _ in range(self.ncols)], self.nrows
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.ncols:
            raise DimensionMismatch("vstack needs equal column counts")
        return Matrix._trusted(self.field, self._rows + other._rows, self.ncols)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.nrows != other.nrows:
            raise DimensionMismatch("hstack needs equal row counts")
        return Matrix._trusted(
            self.field, [a + b for a, b in zip(self._rows, other._rows)], self.ncols + other.ncols
        )

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    def apply(self, v: Sequence) -> list:
        """Row vector ``v`` times this matrix."""
        if len(v) != self.nrows:
            raise DimensionMismatch(f"vector of length {len(v)} against {self.shape}")
        return vec_mat(v, self._rows, self.ncols, self.field.zero)


def row_reduce(m: Matrix) -> tuple[int, Matrix, tuple[int, ...]]:
    """Reduced row-echelon form.

    Returns ``(rank, rref, pivot_cols)``.  ``rref`` keeps the shape of ``m``;
    zero rows sit at the bottom.
    """
    rows = [list(r) for r in m.rows]
    red, pivots = _rref(rows, m.ncols)
    z = m.field.zero
    full = red + [[z] * m.ncols for _ in range(m.nrows - len(red))]
    return len(pivots), Matrix._trusted(m.field, full, m.ncols), tuple(pivots)


def rank(m: Matrix) -> int:
    return row_reduce(m)[0]


def _kernel_rows(rows: list[list], ncols: int, field: Field) -> list[list]:
    red, pivots = _rref([list(r) for r in rows], ncols)
    pivset = set(pivots)
    z, o = field.zero, field.one
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [z] * ncols
        v[f] = o
        for row, pc in zip(red, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    if basis:
        basis, _ = _rref(basis, ncols)
    return basis


def kernel_basis(m: Matrix) -> Matrix:
    """Rows spanning the right null space ``{v : m v^T = 0}``, in rref form."""
    return Matrix._trusted(m.field, _kernel_rows(list(m.rows), m.ncols, m.field), m.ncols)


def left_kernel(m: Matrix) -> Matrix:
    """Rows ``v`` with ``v @ m = 0``, in rref form."""
    return kernel_basis(m.T)


def intersect_rowspaces(u: Matrix, v: Matrix) -> Matrix:
    """Basis (rref) of ``rowspace(u) ∩ rowspace(v)`` via the kernel of ``[u; -v]``."""
    if u.ncols != v.ncols:
        raise DimensionMismatch(f"{u.ncols} vs {v.ncols} columns")
    if u.field != v.field:
        raise FieldMismatch(f"{u.field!r} vs {v.field!r}")
    ub, _ = _rref([list(r) for r in u.rows], u.ncols)
    vb, _ = _rref([list(r) for r in v.rows], v.ncols)
    if not ub or not vb:
        return Matrix._trusted(u.field, [], u.ncols)
    stacked = ub + [[-a for a in r] for r in vb]
    # columns of the transposed system index the stacked rows
    coeffs = _kernel_rows([list(c) for c in zip(*stacked)], len(stacked), u.field)
    z = u.field.zero
    vecs = [vec_mat(c[:len(ub)], ub, u.ncols, z) for c in coeffs]
    red, _ = _rref(vecs, u.ncols) if vecs else ([], [])
    return Matrix._trusted(u.field, red, u.ncols)


class RowSpace:
    """A subspace of ``field^ambient`` held as an rref basis.

    Supports membership, reduction modulo the subspace and coordinates in the
    canonical complement (the non-pivot coordinates).
    """

    __slots__ = ("field", "ambient", "basis", "pivots", "_free")

    def __init__(self, field: Field, ambient: int, vectors: Iterable[Sequence] = ()):
        rows = [list(v) for v in vectors]
        for r in rows:
            if len(r) != ambient:
                raise DimensionMismatch(f"vector of length {len(r)} in ambient {ambient}")
        kind = Fraction if field.characteristic == 0 else ModP
        if any(type(x) is not kind for r in rows for x in r):
            rows = [[field(x) for x in r] for r in rows]
        red, piv = _rref(rows, ambient) if rows else ([], [])
        self.field = field
        self.ambient = ambient
        self.basis = [tuple(r) for r in red]
        self.pivots = tuple(piv)
        pset = set(piv)
        self._free = tuple(j for j in range(ambient) if j not in pset)

    @classmethod
    def full(cls, field: Field, n: int) -> "RowSpace":
        return cls(field, n, Matrix.identity(field, n).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient - len(self.basis)

    @property
    def complement_positions(self) -> tuple[int, ...]:
        return self._free

    def matrix(self) -> Matrix:
        return Matrix._trusted(self.field, self.basis, self.ambient)

    def reduce(self, v: Sequence) -> list:
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            if c:
                for j, a in enumerate(row):
                    if a:
                        v[j] -= c * a
        return v

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def contains_space(self, other: "RowSpace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def quotient_coords(self, v: Sequence) -> list:
        r = self.reduce(v)
        return [r[j] for j in self._free]

    def coordinates(self, v: Sequence) -> list | None:
        """Coefficients of ``v`` in the rref basis, or ``None`` if outside."""
        coeffs = [v[pc] for pc in self.pivots]
        if any(self.reduce(v)):
            return None
        return coeffs

    def sum(self, other: "RowSpace") -> "RowSpace":
        return RowSpace(self.field, self.ambient, list(self.basis) + list(other.basis))

    def intersect(self, other: "RowSpace") -> "RowSpace":
        m = intersect_rowspaces(self.matrix(), other.matrix())
        return RowSpace(self.field, self.ambient, m.rows)

    def image(self, m: Matrix) -> "RowSpace":
        return RowSpace(self.field, m.ncols, [m.apply(b) for b in self.basis])

    def preimage(self, m: Matrix, target: "RowSpace") -> "RowSpace":
        """``{v in self : v @ m in target}``."""
        if not self.basis:
            return self
        z = self.field.zero
        imgs = [target.quotient_coords(m.apply(b)) for b in self.basis]
        ncon = target.codim
        if ncon == 0:
            return self
        coeffs = _kernel_rows([list(c) for c in zip(*imgs)], len(imgs), self.field)
        vecs = [vec_mat(c, self.basis, self.ambient, z) for c in coeffs]
        return RowSpace(self.field, self.ambient, vecs)

    def __eq__(self, other):
        return (
            isinstance(other, RowSpace)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient, tuple(self.basis)))

    def __repr__(self):
        return f"RowSpace(dim={self.dim}, ambient={self.ambient})"


def right_inverse_rows(m: Matrix) -> Matrix:
    """A matrix ``L`` with ``L @ m = I``: one preimage row per target basis vector.

    ``m`` maps ``field^nrows -> field^ncols`` and must be surjective.
    """
    n, c = m.nrows, m.ncols
    f = m.field
    z, o = f.zero, f.one
    # augment columns with identity to track row combinations
    aug = [list(row) + [o if i == j else z for j in range(n)] for i, row in enumerate(m.rows)]
    red, pivots = _rref(aug, c + n)
    if len([p for p in pivots if p < c]) != c:
        raise DimensionMismatch("map is not surjective")
    out = []
    for j in range(c):
        r = pivots.index(j)
        out.append(red[r][c:])
    return Matrix._trusted(f, out, n)
