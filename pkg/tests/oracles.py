"""Independent brute-force oracles.

Nothing here touches the Gröbner machinery or the package's linear algebra:
words are enumerated directly, and ranks come from a small sparse Gaussian
elimination over ``Fraction`` written just for the tests.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product


def words_by_degree(weights, top):
    """``table[d]`` lists all words (tuples of generator indices) of weighted degree ``d``."""
    table = [[()]] + [[] for _ in range(top)]
    for d in range(1, top + 1):
        for i, w in enumerate(weights):
            if w <= d:
                table[d].extend(u + (i,) for u in table[d - w])
    return table


def sparse_rank(rows):
    """Rank of a list of ``{column: Fraction}`` rows."""
    pivots: dict = {}
    rank = 0
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                inv = 1 / row[col]
                pivots[col] = {k: v * inv for k, v in row.items()}
                rank += 1
                break
            piv = pivots[col]
            c = row[col]
            for k, v in piv.items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return rank


def quotient_dims(weights, relations, top):
    """``dim (k<x>/(R))_d`` for ``d <= top``; relations are ``{word: coeff}`` dicts.

    Degree ``d`` of the two-sided ideal is spanned by ``u r v`` over all words
    ``u, v`` and relations ``r`` with matching degree.
    """
    table = words_by_degree(weights, top)
    deg = lambda w: sum(weights[i] for i in w)  # noqa: E731
    rels = [(deg(next(iter(r))), r) for r in relations if r]
    out = []
    for d in range(top + 1):
        rows = []
        for rd, r in rels:
            for a in range(d - rd + 1):
                for u, v in product(table[a], table[d - rd - a]):
                    rows.append({u + w + v: c for w, c in r.items()})
        out.append(len(table[d]) - sparse_rank(rows))
    return out


def weighted_polynomial_dims(weights, top):
    """Coefficients of ``prod 1/(1 - t^q)`` up to ``t^top``."""
    coeffs = [1] + [0] * top
    for q in weights:
        for i in range(q, top + 1):
            coeffs[i] += coeffs[i - q]
    return coeffs


def polynomial_basis(weights, top):
    """Monomials ``x^a`` (exponent tuples) of a weighted polynomial ring, by degree."""
    out = [[] for _ in range(top + 1)]

    def rec(i, d, exps):
        if i == len(weights):
            out[d].append(tuple(exps))
            return
        e = 0
        while d + e * weights[i] <= top:
            rec(i + 1, d + e * weights[i], exps + [e])
            e += 1

    rec(0, 0, [])
    return out
