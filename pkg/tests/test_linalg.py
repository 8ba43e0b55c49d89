from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncproj.errors import DimensionMismatch, FieldMismatch
from ncproj.linalg import (
    GF,
    QQ,
    Matrix,
    ModP,
    RowSpace,
    intersect_rowspaces,
    kernel_basis,
    left_kernel,
    rank,
    right_inverse_rows,
    row_reduce,
)


def small_matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                               min_size=r, max_size=r)))


def test_field_coercions():
    assert QQ("3/4") == Fraction(3, 4)
    f7 = GF(7)
    assert f7(Fraction(1, 2)) == ModP(4, 7)
    assert f7(-1) == f7(6)
    assert QQ.tag == "Q" and f7.tag == "F 7"
    with pytest.raises(FieldMismatch):
        GF(5)(f7(1))
    with pytest.raises(ZeroDivisionError):
        f7(Fraction(1, 7))
    with pytest.raises(ValueError):
        GF(6)


def test_modp_arithmetic():
    f = GF(11)
    a, b = f(3), f(5)
    assert a * b == f(4)
    assert a / b * b == a
    assert (a - b) + b == a
    assert a ** 10 == f.one
    assert not f.zero and bool(f.one)


def test_rref_known_matrix():
    m = Matrix(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, red, piv = row_reduce(m)
    assert r == 2
    assert piv == (0, 1)
    assert red.rows[0] == (1, 0, 1)
    assert red.rows[1] == (0, 1, 1)


def test_kernel_of_rank_deficient():
    m = Matrix(QQ, [[1, 2], [2, 4]])
    k = kernel_basis(m)  # column vectors x with m x = 0, returned as rows
    assert k.shape[0] == 1
    x = k.rows[0]
    assert all(sum(a * b for a, b in zip(row, x)) == 0 for row in m.rows)
    lk = left_kernel(m)
    assert lk.shape[0] == 1
    assert (lk @ m).is_zero()


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        Matrix(QQ, [[1, 2]]) @ Matrix(QQ, [[1, 2]])


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_nullity(rows):
    m = Matrix(QQ, rows)
    r = rank(m)
    assert r + kernel_basis(m).shape[0] == m.shape[1]
    assert r + left_kernel(m).shape[0] == m.shape[0]
    assert (left_kernel(m) @ m).is_zero()


@settings(max_examples=60, deadline=None)
@given(small_matrices(), st.sampled_from([0, 2, 5, 7]))
def test_rank_over_prime_fields_bounded(rows, p):
    f = QQ if p == 0 else GF(p)
    assert rank(Matrix(f, rows)) <= rank(Matrix(QQ, rows))


@settings(max_examples=40, deadline=None)
@given(small_matrices(4, 5), small_matrices(4, 5))
def test_rowspace_intersection_and_sum(a, b):
    n = min(len(a[0]), len(b[0]))
    a = [r[:n] for r in a]
    b = [r[:n] for r in b]
    u, v = RowSpace(QQ, n, a), RowSpace(QQ, n, b)
    s, i = u.sum(v), u.intersect(v)
    assert s.dim + i.dim == u.dim + v.dim
    assert u.contains_space(i) and v.contains_space(i)
    assert s.contains_space(u) and s.contains_space(v)
    m = intersect_rowspaces(Matrix(QQ, a), Matrix(QQ, b))
    assert RowSpace(QQ, n, m.rows) == i


@settings(max_examples=40, deadline=None)
@given(small_matrices(4, 4))
def test_quotient_coordinates_kill_subspace(rows):
    n = len(rows[0])
    u = RowSpace(QQ, n, rows)
    for r in rows:
        assert all(c == 0 for c in u.quotient_coords(r))
    assert len(u.complement_positions) == u.codim
    for v in u.basis:
        assert u.coordinates(v) is not None


@settings(max_examples=40, deadline=None)
@given(small_matrices(4, 4), small_matrices(3, 4))
def test_preimage(mrows, trows):
    m = Matrix(QQ, mrows)
    c = m.shape[1]
    target = RowSpace(QQ, c, [r[:c] + [0] * (c - len(r)) for r in trows])
    pre = RowSpace.full(QQ, m.shape[0]).preimage(m, target)
    for v in pre.basis:
        assert target.contains(m.apply(v))
    # a vector mapping into the target lies in the preimage
    for e in range(m.shape[0]):
        unit = [QQ.zero] * m.shape[0]
        unit[e] = QQ.one
        assert pre.contains(unit) == target.contains(m.apply(unit))


def test_right_inverse():
    m = Matrix(QQ, [[1, 0], [1, 1], [0, 1]])  # surjective R^3 -> R^2
    r = right_inverse_rows(m)
    assert r @ m == Matrix.identity(QQ, 2)
