"""Group certification: abelianization, order, and a combined report."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..lattice import AbelianInvariants, quotient_invariants
from .coset import DEFAULT_MAX_COSETS, Enumeration, todd_coxeter
from .tietze import tietze_simplify
from .words import Presentation


def exponent_matrix(p: Presentation) -> list[list[int]]:
    idx = p.index
    rows = []
    for r in p.relators:
        row = [0] * len(p.generators)
        for g, e in r:
            row[idx[g]] += e
        rows.append(row)
    return rows


def abelianization(p: Presentation) -> AbelianInvariants:
    return quotient_invariants(len(p.generators), exponent_matrix(p))


@dataclass(frozen=True)
class Finite:
    n: int

    def __str__(self):
        return "trivial" if self.n == 1 else f"finite of order {self.n}"


@dataclass(frozen=True)
class InfiniteCertified:
    def __str__(self):
        return "infinite (free abelianization)"


@dataclass(frozen=True)
class Unknown:
    limit: int

    def __str__(self):
        return f"unknown (coset enumeration exceeded {self.limit} cosets)"


GroupOrder = Finite | InfiniteCertified | Unknown


@dataclass(frozen=True)
class GroupReport:
    abelian: AbelianInvariants
    order: GroupOrder
    simplified: Presentation
    notes: tuple[str, ...] = field(default=())

    @property
    def is_trivial(self) -> bool:
        return self.order == Finite(1)

    def to_json(self) -> dict:
        o = self.order
        if isinstance(o, Finite):
            order = {"kind": "finite", "value": o.n}
        elif isinstance(o, InfiniteCertified):
            order = {"kind": "infinite"}
        else:
            order = {"kind": "unknown", "limit": o.limit}
        return {
            "abelian": self.abelian.to_json(),
            "order": order,
            "simplified": self.simplified.to_json(),
            "notes": list(self.notes),
        }


def analyze(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> GroupReport:
    """Simplify, abelianize and enumerate ``p``.

    Infinity is only certified by a free part in the abelianization; in that
    case no enumeration is attempted.
    """
    simplified = tietze_simplify(p)
    ab = abelianization(p)
    notes = []
    if ab.free_rank:
        return GroupReport(ab, InfiniteCertified(), simplified, tuple(notes))
    result: Enumeration = todd_coxeter(simplified, max_cosets)
    if result.exceeded:
        notes.append(f"coset enumeration exceeded {max_cosets} live cosets")
        return GroupReport(ab, Unknown(max_cosets), simplified, tuple(notes))
    n = result.order
    if n % ab.order:
        # cannot happen for a correct enumeration; surfaced rather than hidden
        notes.append(f"inconsistent: abelianization order {ab.order} does not divide {n}")
    if n == ab.order:
        notes.append("group is abelian (order equals abelianization order)")
    return GroupReport(ab, Finite(n), simplified, tuple(notes))
