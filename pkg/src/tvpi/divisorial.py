"""Proper polyhedral divisors over the projective line.

Points of P^1 are opaque labels; only the number of special points and
their polyhedral coefficients matter for everything computed here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .lattice import mu
from .polyhedral import Cone, Polyhedron, as_rational_vector


class DivisorError(ValueError):
    pass


class _Empty:
    """The empty coefficient: the point is removed from the locus."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EMPTY"


EMPTY = _Empty()

PolyCoeff = Polyhedron | _Empty


@dataclass(frozen=True)
class PPDivisor:
    """A polyhedral divisor on P^1 with tail ``tail`` and coefficients keyed by point label.

    Label order is the insertion order of ``coefficients`` and fixes the
    numbering of the ``b`` generators downstream.
    """

    rank_k: int
    tail: Cone
    coefficients: Mapping[str, PolyCoeff] = field(default_factory=dict)

    def __post_init__(self):
        if self.rank_k < 1:
            raise DivisorError("the torus rank must be positive")
        if self.tail.ambient_rank != self.rank_k:
            raise DivisorError("tail cone rank does not match rank_k")
        coeffs = dict(self.coefficients)
        for label, c in coeffs.items():
            if c is EMPTY:
                continue
            if c.ambient_rank != self.rank_k:
                raise DivisorError(f"coefficient at {label!r} has the wrong rank")
            if c.tail != self.tail:
                raise DivisorError(f"coefficient at {label!r} does not carry the divisor's tail cone")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def build(cls, tail_generators: Sequence[Sequence], coefficients: Mapping[str, object], rank_k: int | None = None) -> "PPDivisor":
        """Convenience constructor: ``coefficients`` maps labels to point lists or ``EMPTY``."""
        if rank_k is None:
            rank_k = len(tail_generators[0]) if tail_generators else len(next(iter(next(iter(coefficients.values())))))
        tail = Cone.from_generators(tail_generators, rank_k)
        coeffs = {}
        for label, pts in coefficients.items():
            coeffs[label] = EMPTY if pts is EMPTY else Polyhedron(rank_k, tuple(tuple(p) for p in pts), tail)
        return cls(rank_k, tail, coeffs)

    @property
    def labels(self) -> list[str]:
        return list(self.coefficients)

    @property
    def support(self) -> list[str]:
        return [p for p, c in self.coefficients.items() if c is EMPTY or not c.equals_tail()]

    @property
    def empty_labels(self) -> list[str]:
        return [p for p, c in self.coefficients.items() if c is EMPTY]

    @property
    def has_complete_locus(self) -> bool:
        return not self.empty_labels

    def coefficient(self, label: str) -> PolyCoeff:
        """Coefficient at ``label``; labels not listed carry the tail itself."""
        c = self.coefficients.get(label)
        if c is None:
            return Polyhedron(self.rank_k, ((0,) * self.rank_k,), self.tail)
        return c

    def __str__(self) -> str:
        parts = []
        for label, c in self.coefficients.items():
            parts.append(f"{'EMPTY' if c is EMPTY else c} @ {label}")
        return " + ".join(parts) + f"  (tail {self.tail})"


def evaluate_coefficients(d: PPDivisor, u: Sequence) -> dict[str, Fraction]:
    """Coefficients of the evaluation ``D(u)`` at every point of the locus."""
    u = as_rational_vector(u, d.rank_k)
    if not d.tail.dual.contains(u):
        raise DivisorError("u is not in the dual of the tail cone (unbounded below)")
    return {p: c.support_min(u) for p, c in d.coefficients.items() if c is not EMPTY}


def degree(d: PPDivisor, u: Sequence) -> Fraction:
    if not d.has_complete_locus:
        raise DivisorError("degree is only defined for divisors with complete locus")
    return sum(evaluate_coefficients(d, u).values(), Fraction(0))


@dataclass(frozen=True)
class ProperVerdict:
    """``kind`` is ``"Proper"``, ``"NotSemiample"`` or ``"NotBig"``; ``u`` is the witness."""

    kind: str
    u: tuple[Fraction, ...] | None = None
    value: Fraction | None = None
    note: str = ""

    @property
    def is_proper(self) -> bool:
        return self.kind == "Proper"

    def to_json(self) -> dict:
        out = {"verdict": self.kind}
        if self.u is not None:
            out["u"] = [str(x) for x in self.u]
            out["degree"] = str(self.value)
        if self.note:
            out["note"] = self.note
        return out

    def __str__(self) -> str:
        if self.u is None:
            return self.kind + (f" ({self.note})" if self.note else "")
        u = "(" + ", ".join(str(x) for x in self.u) + ")"
        return f"{self.kind}(u={u}, degree {self.value})"


def is_proper(d: PPDivisor) -> ProperVerdict:
    """Properness over P^1: degrees nonnegative on the dual tail, positive inside it.

    The degree is concave and positively homogeneous in ``u``, so it suffices
    to test the generators of the dual cone and one relative-interior point.
    """
    if not d.has_complete_locus:
        return ProperVerdict("Proper", note="affine locus: every divisor is principal")
    dual = d.tail.dual
    if d.tail.is_zero:
        # bundle case over P^1 minus nothing; treated as a single chart of a divisorial fan
        return ProperVerdict("Proper", note="zero tail: no degree condition imposed")
    if dual.is_zero:
        return ProperVerdict("Proper", note="full-space tail: no degree condition imposed")
    for u in dual.generators:
        val = degree(d, u)
        if val < 0:
            return ProperVerdict("NotSemiample", tuple(Fraction(x) for x in u), val)
    u0 = dual.relative_interior_point()
    val = degree(d, u0)
    if val <= 0:
        return ProperVerdict("NotBig", tuple(Fraction(x) for x in u0), val)
    return ProperVerdict("Proper")


def cone_over_point(d: PPDivisor, label: str) -> Cone:
    """``<(0, tail), (1, coefficient)>`` in ``Z x N``."""
    c = d.coefficient(label)
    if c is EMPTY:
        raise DivisorError(f"coefficient at {label!r} is empty")
    gens = [(0,) + tuple(g) for g in d.tail.generators]
    gens += [(Fraction(1),) + p for p in c.points]
    return Cone.from_generators(gens, d.rank_k + 1)


def mu_profile(d: PPDivisor) -> dict[str, int]:
    """Largest denominator order ``mu`` over the vertices of each support coefficient."""
    out = {}
    for p in d.support:
        c = d.coefficients[p]
        if c is EMPTY:
            continue
        out[p] = max(mu(v) for v in c.vertices())
    return out


@dataclass(frozen=True)
class KltVerdict:
    passed: bool
    total: Fraction
    margin: Fraction
    mu: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "verdict": "Pass" if self.passed else "Fail",
            "boundary_degree": str(self.total),
            ("deficit" if self.passed else "excess"): str(self.margin),
            "mu": dict(self.mu),
        }

    def __str__(self):
        word = "Pass" if self.passed else "Fail"
        return f"{word} (sum of (mu-1)/mu = {self.total})"


def klt_from_mus(mus: Sequence[int]) -> tuple[bool, Fraction, Fraction]:
    total = sum((Fraction(m - 1, m) for m in mus), Fraction(0))
    return (total < 2, total, 2 - total if total < 2 else total - 2)


def klt_necessary_check(d: PPDivisor) -> KltVerdict:
    """Necessary log-terminality test: the boundary ``sum (mu-1)/mu`` must have degree < 2."""
    if not d.has_complete_locus:
        raise DivisorError("klt check needs a complete locus")
    if not d.tail.is_full_dimensional:
        raise DivisorError("good-action hypothesis violated: tail cone is not full-dimensional")
    if not d.tail.is_pointed:
        raise DivisorError("good-action hypothesis violated: tail cone contains a line")
    mus = mu_profile(d)
    passed, total, margin = klt_from_mus(list(mus.values()))
    return KltVerdict(passed, total, margin, mus)


_PLATONIC = ((2, 3, 3), (2, 3, 4), (2, 3, 5))


def platonic_triple_check(m: Sequence[int]) -> bool:
    """Whether ``m`` is (1,p,q), (2,2,r), (2,3,3), (2,3,4) or (2,3,5) in some order."""
    if len(m) != 3 or any(x < 1 for x in m):
        return False
    s = tuple(sorted(m))
    if s[0] == 1:
        return True
    if s[0] == 2 and s[1] == 2:
        return True
    return s in _PLATONIC


@dataclass(frozen=True)
class DivisorialFanP1:
    """A set of polyhedral divisors on P^1 sharing the lattice rank.

    Only shared rank is enforced; the face and intersection axioms are
    trusted and reported as a warning.
    """

    rank_k: int
    members: tuple[PPDivisor, ...]
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.members:
            raise DivisorError("a divisorial fan needs at least one member")
        for d in self.members:
            if d.rank_k != self.rank_k:
                raise DivisorError("divisorial fan members must share rank_k")
        object.__setattr__(self, "members", tuple(self.members))
        warn = list(self.warnings)
        label_sets = {tuple(sorted(d.labels)) for d in self.members}
        if len(label_sets) > 1:
            warn.append("members list different point labels; missing labels carry the tail coefficient")
        if len(self.members) > 1:
            warn.append("face and intersection conditions of the divisorial fan are not verified")
        object.__setattr__(self, "warnings", tuple(dict.fromkeys(warn)))

    @property
    def points(self) -> list[str]:
        """Union of member supports, in first-seen order."""
        out: dict[str, None] = {}
        for d in self.members:
            for p in d.support:
                out.setdefault(p, None)
        return list(out)

    @property
    def tail_cones(self) -> list[Cone]:
        return list(dict.fromkeys(d.tail for d in self.members))
