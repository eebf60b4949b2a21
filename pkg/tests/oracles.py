"""Independent reference computations used by the tests.

Nothing here calls into the package's lattice or polyhedral code: integer
normal forms come from sympy, cone membership from rational linear algebra.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors, smith_normal_decomp


def quotient_invariants(n: int, rows: list[list[int]]) -> tuple[tuple[int, ...], int]:
    """``Z^n / span(rows)`` as (torsion coefficients > 1, free rank), via sympy."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return (), n
    factors = [abs(int(d)) for d in invariant_factors(Matrix(rows), domain=ZZ) if d != 0]
    return tuple(d for d in factors if d > 1), n - len(factors)


def integer_kernel(rows: list[list[int]], n: int) -> list[list[int]]:
    """A basis of ``{x in Z^n : rows . x = 0}``."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    m = Matrix(rows)
    s, u, v = smith_normal_decomp(m, domain=ZZ)
    r = sum(1 for i in range(min(s.shape)) if s[i, i] != 0)
    # u m v = s, so columns r.. of v span the integer kernel
    return [[int(v[i, j]) for i in range(n)] for j in range(r, n)]


def saturation(rows: list[list[int]], n: int) -> list[list[int]]:
    """Integer points of the rational span of ``rows``: the kernel of its kernel."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    perp = [[int(c * _lcm_den(x)) for c in x] for x in _rational_nullspace(rows)]
    return integer_kernel(perp, n)


def _rational_nullspace(rows):
    return [list(v) for v in Matrix(rows).nullspace()]


def _lcm_den(v):
    from math import lcm

    d = 1
    for x in v:
        d = lcm(d, int(Fraction(str(x)).denominator))
    return d


def in_cone(x, gens) -> bool:
    """Caratheodory: ``x`` is a nonnegative combination of some independent subset of ``gens``."""
    if not any(x):
        return True
    gens = [list(g) for g in gens]
    for k in range(1, len(gens) + 1):
        for sub in itertools.combinations(gens, k):
            a = Matrix(sub).T
            if a.rank() < k:
                continue
            try:
                sol, params = a.gauss_jordan_solve(Matrix(list(x)))
            except ValueError:
                continue
            if all(s >= 0 for s in sol):
                return True
    return False


def seifert_order(ms, es) -> int | None:
    """Order of the spherical Seifert-type group with cone points ``m_i >= 2``.

    ``|G| = 4 |e| / chi^2`` with ``chi = 2 - sum(1 - 1/m_i)`` and ``e = sum e_i/m_i``.
    """
    chi = 2 - sum(Fraction(m - 1, m) for m in ms)
    e = sum(Fraction(a, m) for a, m in zip(es, ms))
    if chi <= 0 or e == 0:
        return None
    val = 4 * abs(e) / chi**2
    assert val.denominator == 1
    return int(val)


def apply_word(table_rows, letters, start=0):
    """Follow ``letters`` (``+-(i+1)`` encoding) through a coset table from ``start``."""
    c = start
    for x in letters:
        col = 2 * (abs(x) - 1) + (0 if x > 0 else 1)
        c = table_rows[c][col]
    return c


def letters(word, generators):
    idx = {g: i + 1 for i, g in enumerate(generators)}
    out = []
    for g, e in word:
        out.extend([idx[g] if e > 0 else -idx[g]] * abs(e))
    return out


def trivial_in(table, generators, word) -> bool:
    """``word`` is trivial in a group given by its regular coset table."""
    return apply_word(table.rows, letters(word, generators)) == 0 and all(
        apply_word(table.rows, letters(word, generators), c) == c for c in range(len(table.rows))
    )
