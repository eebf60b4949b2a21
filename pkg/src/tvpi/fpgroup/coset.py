"""Todd-Coxeter coset enumeration over the trivial subgroup (HLT strategy)."""
from __future__ import annotations

from array import array
from dataclasses import dataclass

from .words import Presentation

DEFAULT_MAX_COSETS = 1_000_000


class _Overflow(Exception):
    pass


@dataclass(frozen=True)
class CosetTable:
    """A closed, standardized coset table.

    Column ``2*i`` is generator ``i``, column ``2*i + 1`` its inverse.
    Rows are numbered in breadth-first order from the identity coset.
    """

    generators: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class Enumeration:
    """Outcome of :func:`todd_coxeter`: ``order`` is ``None`` when the bound was hit."""

    order: int | None
    limit: int
    table: CosetTable | None = None

    @property
    def exceeded(self) -> bool:
        return self.order is None


class _Enumerator:
    def __init__(self, ngens: int, relators: list[list[int]], max_cosets: int):
        self.ncols = 2 * ngens
        self.cols = [array("l") for _ in range(self.ncols)]
        self.forward: list[int] = []
        self.live = 0
        self.max_cosets = max_cosets
        self.max_total = 10 * max_cosets + 1000
        self.relators = [[self._col(x) for x in r] for r in relators if r]
        self._new_coset()

    @staticmethod
    def _col(x: int) -> int:
        return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1

    @staticmethod
    def _inv(c: int) -> int:
        return c ^ 1

    def _new_coset(self) -> int:
        if self.live >= self.max_cosets or len(self.forward) >= self.max_total:
            raise _Overflow
        n = len(self.forward)
        for col in self.cols:
            col.append(-1)
        self.forward.append(n)
        self.live += 1
        return n

    def define(self, c: int, x: int) -> None:
        d = self._new_coset()
        self.cols[x][c] = d
        self.cols[x ^ 1][d] = c

    def rep(self, c: int) -> int:
        root = c
        while self.forward[root] != root:
            root = self.forward[root]
        while self.forward[c] != root:
            self.forward[c], c = root, self.forward[c]
        return root

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.forward[b] = a
        self.live -= 1
        queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        cols = self.cols
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = cols[x][e]
                if f < 0:
                    continue
                cols[x ^ 1][f] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if cols[x][e1] >= 0:
                    self._merge(f1, cols[x][e1], queue)
                elif cols[x ^ 1][f1] >= 0:
                    self._merge(e1, cols[x ^ 1][f1], queue)
                else:
                    cols[x][e1] = f1
                    cols[x ^ 1][f1] = e1

    def scan_and_fill(self, c: int, w: list[int]) -> None:
        cols = self.cols
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and cols[w[i]][f] >= 0:
                f = cols[w[i]][f]
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                return
            while j >= i and cols[w[j] ^ 1][b] >= 0:
                b = cols[w[j] ^ 1][b]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                cols[w[i]][f] = b
                cols[w[i] ^ 1][b] = f
                return
            self.define(f, w[i])

    def run(self) -> None:
        c = 0
        while c < len(self.forward):
            if self.forward[c] == c:
                for w in self.relators:
                    self.scan_and_fill(c, w)
                    if self.forward[c] != c:
                        break
                else:
                    for x in range(self.ncols):
                        if self.cols[x][c] < 0:
                            self.define(c, x)
            c += 1

    def standardized(self) -> tuple[tuple[int, ...], ...]:
        number = {0: 0}
        order = [0]
        k = 0
        while k < len(order):
            c = order[k]
            k += 1
            for x in range(self.ncols):
                d = self.rep(self.cols[x][c])
                if d not in number:
                    number[d] = len(order)
                    order.append(d)
        return tuple(
            tuple(number[self.rep(self.cols[x][c])] for x in range(self.ncols)) for c in order
        )


def todd_coxeter(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> Enumeration:
    """Enumerate the cosets of the trivial subgroup of ``p``.

    Returns the group order when the table closes within ``max_cosets``
    live cosets, otherwise an :class:`Enumeration` with ``order`` ``None``.
    """
    if not p.generators:
        return Enumeration(1, max_cosets, CosetTable((), ((),)))
    enum = _Enumerator(len(p.generators), p.letter_relators(), max_cosets)
    try:
        enum.run()
    except _Overflow:
        return Enumeration(None, max_cosets)
    rows = enum.standardized()
    return Enumeration(len(rows), max_cosets, CosetTable(p.generators, rows))
