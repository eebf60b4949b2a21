"""Bounded Tietze simplification of presentations."""
from __future__ import annotations

from collections import Counter

from .words import (
    Presentation,
    cyclic_reduce,
    free_reduce,
    from_letters,
    invert_letters,
)

MAX_TOTAL_LENGTH = 20_000


def _key(letters: list[int]) -> tuple:
    best = None
    for cand in (letters, invert_letters(letters)):
        for k in range(len(cand)):
            rot = tuple(cand[k:] + cand[:k])
            if best is None or rot < best:
                best = rot
    return best or ()


def _cleanup(rels: list[list[int]], tags: list[str]):
    out, out_tags, seen = [], [], set()
    for r, t in zip(rels, tags):
        r = cyclic_reduce(r)
        if not r:
            continue
        k = _key(r)
        if k in seen:
            continue
        seen.add(k)
        out.append(r)
        out_tags.append(t)
    return out, out_tags


def _eliminate(gens: list[str], rels: list[list[int]], tags: list[str]):
    """Remove one generator occurring exactly once in some relator."""
    order = sorted(range(len(rels)), key=lambda i: (len(rels[i]), i))
    for i in order:
        counts = Counter(abs(x) for x in rels[i])
        once = [g for g, c in counts.items() if c == 1]
        if not once:
            continue
        g = max(once)
        r = rels[i]
        pos = next(k for k, x in enumerate(r) if abs(x) == g)
        rot = r[pos:] + r[:pos]
        rest = rot[1:]
        # g^e rest = 1, so g = rest^-1 when e = 1 and g = rest when e = -1
        image = invert_letters(rest) if rot[0] > 0 else list(rest)
        new_rels = []
        for j, s in enumerate(rels):
            if j == i:
                continue
            w = []
            for x in s:
                if x == g:
                    w.extend(image)
                elif x == -g:
                    w.extend(invert_letters(image))
                else:
                    w.append(x)
            new_rels.append(w)
        if sum(map(len, new_rels)) > MAX_TOTAL_LENGTH:
            continue
        new_tags = [t for j, t in enumerate(tags) if j != i]
        renum = [x if abs(x) < g else (x - 1 if x > 0 else x + 1) for w in new_rels for x in w]
        # rebuild per-relator lists after renumbering
        out, k = [], 0
        for w in new_rels:
            out.append(renum[k : k + len(w)])
            k += len(w)
        return gens[: g - 1] + gens[g:], out, new_tags
    return None


def _shorten(rels: list[list[int]]) -> bool:
    """Replace a long piece of one relator by the short remainder of another."""
    for i, r in enumerate(rels):
        n = len(r)
        if n == 0:
            continue
        for j, s in enumerate(rels):
            if i == j or len(s) < n // 2 + 1:
                continue
            doubled = s + s
            for cand in (r, invert_letters(r)):
                for k in range(n):
                    w = cand[k:] + cand[:k]
                    for l in range(min(n, len(s)), n // 2, -1):
                        piece = w[:l]
                        start = _find(doubled, piece, len(s))
                        if start is None:
                            continue
                        rot = s[start:] + s[:start]
                        new = cyclic_reduce(invert_letters(w[l:]) + rot[l:])
                        if len(new) < len(s):
                            rels[j] = new
                            return True
    return False


def _find(hay: list[int], needle: list[int], limit: int) -> int | None:
    m = len(needle)
    for st in range(limit):
        if hay[st : st + m] == needle:
            return st
    return None


def tietze_simplify(p: Presentation, max_passes: int = 100) -> Presentation:
    """Simplify ``p`` by Tietze moves until a fixed point or ``max_passes``.

    Each pass removes empty and duplicate relators, eliminates a generator
    that occurs exactly once in some relator, or shortens a relator by
    substituting part of another one. Every step preserves the group.
    """
    gens = list(p.generators)
    rels = [free_reduce(r) for r in p.letter_relators()]
    tags = list(p.provenance)
    for _ in range(max_passes):
        rels, tags = _cleanup(rels, tags)
        step = _eliminate(gens, rels, tags)
        if step is not None:
            gens, rels, tags = step
            continue
        if _shorten(rels):
            continue
        break
    rels, tags = _cleanup(rels, tags)
    return Presentation(
        tuple(gens),
        tuple(from_letters(r, gens) for r in rels),
        tuple(tags),
    )
