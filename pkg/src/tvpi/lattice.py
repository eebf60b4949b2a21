"""Exact integer linear algebra: Hermite and Smith normal forms, saturation,
quotient invariants and primitive vectors.

Matrices are plain sequences of integer rows. Nothing here touches floating
point; Python integers are arbitrary precision.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

IntVector = tuple[int, ...]
IntMatrix = Sequence[Sequence[int]]


def _check_int_matrix(m: IntMatrix, ncols: int | None = None) -> list[list[int]]:
    rows = [list(r) for r in m]
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    for r in rows:
        if len(r) != width:
            raise ValueError("rows of an integer matrix must have equal length")
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"integer matrix entries must be int, got {x!r}")
    return rows


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: IntMatrix, b: IntMatrix) -> list[list[int]]:
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def rank(m: IntMatrix) -> int:
    """Rank over the rationals."""
    return len(hnf(m))


def hnf(m: IntMatrix) -> list[list[int]]:
    """Row-style Hermite normal form with zero rows removed.

    Pivots are positive and entries above each pivot lie in ``[0, pivot)``,
    so two generating sets of the same row lattice give identical output.
    """
    rows = _check_int_matrix(m)
    if not rows:
        return []
    ncols = len(rows[0])
    pivot_row = 0
    pivots: list[int] = []
    for col in range(ncols):
        if pivot_row == len(rows):
            break
        while True:
            nonzero = [i for i in range(pivot_row, len(rows)) if rows[i][col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: abs(rows[i][col]))
            rows[pivot_row], rows[best] = rows[best], rows[pivot_row]
            p = rows[pivot_row][col]
            done = True
            for i in range(pivot_row + 1, len(rows)):
                q = rows[i][col] // p
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[pivot_row])]
                if rows[i][col] != 0:
                    done = False
            if done:
                break
        if rows[pivot_row][col] == 0:
            continue
        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-a for a in rows[pivot_row]]
        p = rows[pivot_row][col]
        for i in range(pivot_row):
            q = rows[i][col] // p
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    return [r for r in rows[:pivot_row]]


@dataclass(frozen=True)
class SmithForm:
    diag: tuple[int, ...]
    left: list[list[int]]
    right: list[list[int]]
    right_inverse: list[list[int]]


def smith(m: IntMatrix, ncols: int | None = None) -> SmithForm:
    """Smith normal form with transformation tracking.

    Returns ``left``, ``right`` unimodular with ``left @ m @ right`` diagonal
    (entries ``diag``, each dividing the next), plus ``right``'s inverse.
    ``ncols`` must be given when ``m`` has no rows.
    """
    a = _check_int_matrix(m, ncols)
    nr = len(a)
    nc = ncols if ncols is not None else (len(a[0]) if a else 0)
    left = identity(nr)
    right = identity(nc)
    rinv = identity(nc)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]
        rinv[i], rinv[j] = rinv[j], rinv[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, q):
        # col[dst] += q * col[src]; inverse acts on rows of rinv
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]
        rinv[src] = [x - q * y for x, y in zip(rinv[src], rinv[dst])]

    t = 0
    while t < min(nr, nc):
        entries = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                q = a[i][t] // p
                if q:
                    add_row(i, t, -q)
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, nc):
                q = a[t][j] // p
                if q:
                    add_col(j, t, -q)
                if a[t][j]:
                    dirty = True
            if dirty:
                cand = [(abs(a[i][t]), i, t) for i in range(t + 1, nr) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t + 1, nc) if a[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        t += 1
    diag = tuple(a[i][i] for i in range(min(nr, nc)))
    return SmithForm(diag, left, right, rinv)


def snf(m: IntMatrix, ncols: int | None = None):
    """Return ``(diag, left, right)`` with ``left @ m @ right`` diagonal."""
    s = smith(m, ncols)
    return s.diag, s.left, s.right


@dataclass(frozen=True)
class AbelianInvariants:
    """A finitely generated abelian group ``Z^free_rank + sum Z/torsion_i``."""

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion coefficients must form a divisibility chain")
        if any(d < 2 for d in self.torsion) or self.free_rank < 0:
            raise ValueError("invalid abelian invariants")

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Group order, ``None`` when infinite."""
        if self.free_rank:
            return None
        return math.prod(self.torsion)

    def to_json(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "1"


def quotient_invariants(ambient_rank: int, generators: IntMatrix) -> AbelianInvariants:
    """Invariants of ``Z^ambient_rank`` modulo the lattice spanned by ``generators``."""
    s = smith(generators, ambient_rank)
    nonzero = [d for d in s.diag if d]
    return AbelianInvariants(
        torsion=tuple(d for d in nonzero if d > 1),
        free_rank=ambient_rank - len(nonzero),
    )


@dataclass(frozen=True)
class LatticeBasis:
    """A sublattice of ``Z^ambient_rank`` stored by its canonical HNF basis."""

    ambient_rank: int
    basis: tuple[IntVector, ...]

    @classmethod
    def from_generators(cls, generators: IntMatrix, ambient_rank: int) -> "LatticeBasis":
        rows = _check_int_matrix(generators, ambient_rank)
        return cls(ambient_rank, tuple(tuple(r) for r in hnf(rows)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        return hnf(list(self.basis) + [list(v)]) == [list(b) for b in self.basis]

    def contains_lattice(self, other: "LatticeBasis") -> bool:
        return all(self.contains(v) for v in other.basis)


def saturate(basis: IntMatrix, ambient_rank: int) -> LatticeBasis:
    """The saturation ``Z^n`` intersected with the rational span of ``basis``."""
    rows = _check_int_matrix(basis, ambient_rank)
    s = smith(rows, ambient_rank)
    r = sum(1 for d in s.diag if d)
    # rows = left^-1 D right^-1, so the span is that of the first r rows of right^-1
    return LatticeBasis.from_generators(s.right_inverse[:r], ambient_rank)


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted")
    return Fraction(x)


def mu(v: Sequence) -> int:
    """Least positive integer ``m`` with ``m * v`` integral."""
    return math.lcm(1, *(_as_fraction(x).denominator for x in v))


def primitive(v: Sequence) -> IntVector:
    """The primitive lattice vector on the ray through the rational vector ``v``."""
    fv = [_as_fraction(x) for x in v]
    if not any(fv):
        raise ValueError("the zero vector has no primitive generator")
    m = mu(fv)
    iv = [int(x * m) for x in fv]
    g = math.gcd(*iv)
    return tuple(x // g for x in iv)


def random_unimodular(n: int, rng: random.Random, steps: int = 12, bound: int = 3) -> list[list[int]]:
    """A random unimodular matrix built from elementary operations."""
    u = identity(n)
    if n == 0:
        return u
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if n > 1 and i == j:
            continue
        if i == j:
            u[i] = [-x for x in u[i]]
            continue
        q = rng.randint(-bound, bound)
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]
    if rng.random() < 0.5:
        perm = list(range(n))
        rng.shuffle(perm)
        u = [u[p] for p in perm]
    return u
