"""Words in a free group and finite presentations.

A word is a tuple of ``(generator, exponent)`` syllables, freely reduced.
Algorithms work on letter lists: generator ``i`` is the integer ``i + 1``
and its inverse ``-(i + 1)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Word = tuple[tuple[str, int], ...]

_SYLLABLE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


class PresentationError(ValueError):
    pass


def reduce_word(syllables: Iterable[tuple[str, int]]) -> Word:
    """Merge adjacent equal generators and drop zero exponents."""
    out: list[list] = []
    for g, e in syllables:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([g, e])
    return tuple((g, e) for g, e in out)


def word(*syllables) -> Word:
    """``word("t", ("b1", 3))`` is ``t b1^3``."""
    return reduce_word((s, 1) if isinstance(s, str) else tuple(s) for s in syllables)


def inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def power(w: Word, n: int) -> Word:
    if n < 0:
        w, n = inverse(w), -n
    return reduce_word(w * n)


def commutator(a: str, b: str) -> Word:
    """``[a, b] = a^-1 b^-1 a b``."""
    return ((a, -1), (b, -1), (a, 1), (b, 1))


def length(w: Word) -> int:
    return sum(abs(e) for _, e in w)


def to_letters(w: Word, index: dict[str, int]) -> list[int]:
    out = []
    for g, e in w:
        x = index[g] + 1
        out.extend([x if e > 0 else -x] * abs(e))
    return out


def from_letters(letters: Sequence[int], generators: Sequence[str]) -> Word:
    return reduce_word((generators[abs(x) - 1], 1 if x > 0 else -1) for x in letters)


def free_reduce(letters: Sequence[int]) -> list[int]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def cyclic_reduce(letters: Sequence[int]) -> list[int]:
    w = free_reduce(letters)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i : j + 1]


def invert_letters(letters: Sequence[int]) -> list[int]:
    return [-x for x in reversed(letters)]


def canonical_relator(w: Word) -> Word:
    """Representative of ``w`` up to cyclic rotation and inversion.

    Two relators with the same representative have the same normal closure.
    Ordering is by generator name, so the result does not depend on the
    order in which generators are declared.
    """
    names = sorted({g for g, _ in w})
    index = {g: i for i, g in enumerate(names)}
    letters = cyclic_reduce(to_letters(w, index))
    if not letters:
        return ()
    best = None
    for cand in (letters, invert_letters(letters)):
        for k in range(len(cand)):
            rot = cand[k:] + cand[:k]
            key = [(abs(x), -x) for x in rot]
            if best is None or key < best[0]:
                best = (key, rot)
    return from_letters(best[1], names)


def parse_word(text: str) -> Word:
    """Parse ``"t1^2 t2 b1^-5"``; ``"1"`` or the empty string is the identity."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.split():
        m = _SYLLABLE.match(tok)
        if not m:
            raise PresentationError(f"cannot parse syllable {tok!r}")
        out.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
    return reduce_word(out)


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in w)


def format_word_gap(w: Word) -> str:
    if not w:
        return "One(F)"
    return "*".join(f"F.{g}" if e == 1 else f"F.{g}^{e}" for g, e in w)


@dataclass(frozen=True)
class Presentation:
    """Generators, relator words, and a provenance tag per relator."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    provenance: tuple[str, ...] = None
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(reduce_word(r) for r in self.relators))
        if self.provenance is None:
            object.__setattr__(self, "provenance", ("input",) * len(self.relators))
        object.__setattr__(self, "provenance", tuple(self.provenance))
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator names")
        if len(self.provenance) != len(self.relators):
            raise PresentationError("one provenance tag per relator is required")
        known = set(self.generators)
        for r in self.relators:
            for g, _ in r:
                if g not in known:
                    raise PresentationError(f"relator {format_word(r)!r} uses undeclared generator {g!r}")

    @property
    def index(self) -> dict[str, int]:
        return {g: i for i, g in enumerate(self.generators)}

    def letter_relators(self) -> list[list[int]]:
        idx = self.index
        return [to_letters(r, idx) for r in self.relators]

    def canonical_relators(self) -> list[Word]:
        return sorted((canonical_relator(r) for r in self.relators), key=lambda w: (length(w), w))

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [format_word(r) for r in self.relators],
            "provenance": list(self.provenance),
        }

    def to_gap(self) -> str:
        gens = ", ".join(f'"{g}"' for g in self.generators)
        rels = ", ".join(format_word_gap(r) for r in self.relators)
        return f"F := FreeGroup({gens});; G := F / [{rels}];;"

    def __str__(self) -> str:
        rels = ", ".join(format_word(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"


def parse_presentation(generators: Sequence[str], relators: Sequence[str]) -> Presentation:
    return Presentation(tuple(generators), tuple(parse_word(r) for r in relators))
