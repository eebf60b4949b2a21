"""Built-in examples: Du Val singularities, log-terminal triples, and a trivial-group example."""
from __future__ import annotations

from fractions import Fraction

from .divisorial import PPDivisor
from .documents import InputDocument

LOGTERMINAL_TRIPLES = ((1, 2, 3), (2, 2, 3), (2, 3, 3), (2, 3, 4), (2, 3, 5))


def _rank_one(coeffs: dict[str, Fraction]) -> PPDivisor:
    return PPDivisor.build([(1,)], {p: [(c,)] for p, c in coeffs.items()}, rank_k=1)


def duval(name: str) -> PPDivisor:
    """Du Val singularity ``A1..``, ``D4..``, ``E6``, ``E7``, ``E8`` as a divisor with tail Q>=0."""
    family, i = name[0], int(name[1:])
    if family == "A" and i >= 1:
        return _rank_one({"inf": Fraction(i + 1, i)})
    if family == "D" and i >= 4:
        return _rank_one({"0": Fraction(1, 2), "1": Fraction(1, i - 2), "inf": Fraction(-1, 2)})
    if family == "E" and i in (6, 7, 8):
        return _rank_one({"0": Fraction(1, 3), "1": Fraction(1, i - 3), "inf": Fraction(-1, 2)})
    raise KeyError(f"no Du Val singularity {name!r}")


def logterminal(m: tuple[int, int, int], e: tuple[int, int, int] = (1, 1, -1)) -> PPDivisor:
    """``{e1/m1}@0 + {e2/m2}@1 + {e3/m3}@inf`` with tail Q>=0."""
    return _rank_one({p: Fraction(ei, mi) for p, ei, mi in zip(("0", "1", "inf"), e, m)})


def trivial_rank2() -> PPDivisor:
    """Rank-2 divisor whose variety and punctured variety both have trivial group."""
    return PPDivisor.build(
        [(-1, 1), (11, 8)],
        {
            "0": [(Fraction(2, 5), Fraction(1, 5))],
            "1": [(Fraction(1, 3), Fraction(1, 3))],
            "inf": [(0, 0), (1, 0)],
        },
    )


def builtin(name: str) -> InputDocument:
    if name.startswith("duval:"):
        return InputDocument("ppdivisor", duval(name.split(":", 1)[1]))
    if name == "example:trivial-rank2":
        return InputDocument("ppdivisor", trivial_rank2())
    if name.startswith("example:logterminal-"):
        body = name.split("-", 1)[1].strip("()")
        m = tuple(int(x) for x in body.split(","))
        if len(m) != 3:
            raise KeyError(name)
        return InputDocument("ppdivisor", logterminal(m))
    raise KeyError(f"unknown built-in example {name!r}")


def corpus_entries() -> list[tuple[str, str, dict]]:
    """``(input name, command, flags)`` in a fixed order."""
    out = []
    for i in range(1, 9):
        out.append((f"duval:A{i}", "local-pi1", {}))
    for i in range(4, 9):
        out.append((f"duval:D{i}", "local-pi1", {}))
    for i in (6, 7, 8):
        out.append((f"duval:E{i}", "local-pi1", {}))
    for m in LOGTERMINAL_TRIPLES:
        name = f"example:logterminal-({m[0]},{m[1]},{m[2]})"
        out.append((name, "validate", {}))
        out.append((name, "local-pi1", {}))
    out.append(("example:trivial-rank2", "validate", {}))
    out.append(("example:trivial-rank2", "pi1", {"allow_improper": True}))
    out.append(("example:trivial-rank2", "local-pi1", {"allow_improper": True, "faces": "rays"}))
    out.append(("example:trivial-rank2", "local-pi1", {"allow_improper": True, "faces": "all"}))
    return out
