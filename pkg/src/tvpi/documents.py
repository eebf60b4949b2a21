"""JSON input documents: parsing with positioned errors, and canonical serialization."""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .divisorial import EMPTY, DivisorError, DivisorialFanP1, PPDivisor
from .fpgroup import Presentation, PresentationError, format_word, parse_word
from .polyhedral import Cone, Fan, PolyhedralError, Polyhedron

KINDS = ("ppdivisor", "divisorial_fan", "fan", "presentation", "cstar_bundle")

_RATIONAL = re.compile(r"^\s*[+-]?\d+\s*(/\s*[+-]?\d+\s*)?$")


class DocumentError(ValueError):
    """Schema errors; ``errors`` holds one message per problem, with line numbers when known."""

    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = errors


@dataclass(frozen=True)
class InputDocument:
    kind: str
    value: Any


def _line_of(text: str, pattern: str, occurrence: int = 0) -> int | None:
    matches = list(re.finditer(pattern, text))
    if len(matches) <= occurrence:
        return None
    return text.count("\n", 0, matches[occurrence].start()) + 1


def _at(msg: str, line: int | None) -> str:
    return f"line {line}: {msg}" if line else msg


def parse_rational(x, where: str) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise DocumentError([f"{where}: expected an integer or an 'a/b' string, got {x!r}"])
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL.match(x):
        try:
            return Fraction(x.replace(" ", ""))
        except ZeroDivisionError:
            pass
    raise DocumentError([f"{where}: cannot read {x!r} as a rational number"])


def _vector(v, rank: int, where: str) -> tuple[Fraction, ...]:
    if not isinstance(v, list):
        raise DocumentError([f"{where}: expected a list of coordinates"])
    if len(v) != rank:
        raise DocumentError([f"{where}: vector has length {len(v)}, expected rank {rank}"])
    return tuple(parse_rational(x, f"{where}[{i}]") for i, x in enumerate(v))


def _int(x, where: str, minimum: int | None = None) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise DocumentError([f"{where}: expected an integer, got {x!r}"])
    if minimum is not None and x < minimum:
        raise DocumentError([f"{where}: must be at least {minimum}"])
    return x


def _divisor(obj: dict, rank: int, where: str, text: str) -> PPDivisor:
    if not isinstance(obj, dict):
        raise DocumentError([f"{where}: expected an object"])
    base = obj.get("base", "P1")
    if base not in ("P1", "p1", "P^1"):
        raise DocumentError([f"{where}.base: only the projective line is supported, got {base!r}"])
    tail_raw = obj.get("tail", [])
    if not isinstance(tail_raw, list):
        raise DocumentError([f"{where}.tail: expected a list of generators"])
    tail_gens = [_vector(g, rank, f"{where}.tail[{i}]") for i, g in enumerate(tail_raw)]
    tail = Cone.from_generators(tail_gens, rank)
    coeffs_raw = obj.get("coefficients", [])
    if not isinstance(coeffs_raw, list):
        raise DocumentError([f"{where}.coefficients: expected a list"])
    errors = []
    coeffs: dict[str, object] = {}
    seen: dict[str, int] = {}
    for i, c in enumerate(coeffs_raw):
        cw = f"{where}.coefficients[{i}]"
        if not isinstance(c, dict) or "point" not in c:
            errors.append(f"{cw}: expected an object with a 'point' label")
            continue
        label = str(c["point"])
        if label in coeffs:
            pat = r'"point"\s*:\s*"?' + re.escape(label) + r'"?\s*[,}]'
            seen[label] = seen.get(label, 0) + 1
            errors.append(_at(f"{cw}: duplicate point label {label!r}", _line_of(text, pat, seen[label])))
            continue
        if c.get("empty"):
            if c.get("points"):
                errors.append(f"{cw}: an empty coefficient cannot list points")
                continue
            coeffs[label] = EMPTY
            continue
        pts_raw = c.get("points")
        if not isinstance(pts_raw, list) or not pts_raw:
            errors.append(f"{cw}: a coefficient needs a nonempty 'points' list or \"empty\": true")
            continue
        try:
            pts = tuple(_vector(p, rank, f"{cw}.points[{j}]") for j, p in enumerate(pts_raw))
        except DocumentError as e:
            errors.extend(e.errors)
            continue
        coeffs[label] = Polyhedron(rank, pts, tail)
    if errors:
        raise DocumentError(errors)
    return PPDivisor(rank, tail, coeffs)


def parse(text: str) -> InputDocument:
    """Parse and validate a JSON input document."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError([f"line {e.lineno} column {e.colno}: invalid JSON: {e.msg}"]) from None
    try:
        return from_json(obj, text)
    except (PolyhedralError, DivisorError, PresentationError) as e:
        raise DocumentError([str(e)]) from None


def from_json(obj: Any, text: str = "") -> InputDocument:
    if not isinstance(obj, dict):
        raise DocumentError(["document must be a JSON object"])
    kind = obj.get("kind")
    if kind not in KINDS:
        raise DocumentError([_at(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", _line_of(text, r'"kind"'))])
    if kind == "ppdivisor":
        rank = _int(obj.get("rank_k"), "rank_k", 1)
        return InputDocument(kind, _divisor(obj, rank, "document", text))
    if kind == "divisorial_fan":
        rank = _int(obj.get("rank_k"), "rank_k", 1)
        members = obj.get("members")
        if not isinstance(members, list) or not members:
            raise DocumentError(["members: expected a nonempty list of divisors"])
        ds = tuple(_divisor(m, rank, f"members[{i}]", text) for i, m in enumerate(members))
        return InputDocument(kind, DivisorialFanP1(rank, ds))
    if kind == "fan":
        rank = _int(obj.get("rank"), "rank", 1)
        cones = obj.get("cones")
        if not isinstance(cones, list):
            raise DocumentError(["cones: expected a list of generator lists"])
        gens = []
        for i, c in enumerate(cones):
            if not isinstance(c, list):
                raise DocumentError([f"cones[{i}]: expected a list of generators"])
            gens.append([_vector(g, rank, f"cones[{i}][{j}]") for j, g in enumerate(c)])
        return InputDocument(kind, Fan.from_generators(rank, gens))
    if kind == "presentation":
        gens = obj.get("generators")
        rels = obj.get("relators", [])
        if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
            raise DocumentError(["generators: expected a list of names"])
        if not isinstance(rels, list) or not all(isinstance(r, str) for r in rels):
            raise DocumentError(["relators: expected a list of words"])
        return InputDocument(kind, Presentation(tuple(gens), tuple(parse_word(r) for r in rels)))
    pts = obj.get("points")
    if not isinstance(pts, list):
        raise DocumentError(["points: expected a list of {e, m} objects"])
    out, errors = [], []
    for i, p in enumerate(pts):
        if not isinstance(p, dict):
            errors.append(f"points[{i}]: expected an object")
            continue
        try:
            e = _int(p.get("e"), f"points[{i}].e")
            m = _int(p.get("m"), f"points[{i}].m", 1)
        except DocumentError as err:
            errors.extend(err.errors)
            continue
        if math.gcd(e, m) != 1:
            errors.append(_at(f"points[{i}]: fraction {e}/{m} is not reduced", _line_of(text, r'"e"', i)))
            continue
        out.append((e, m))
    if errors:
        raise DocumentError(errors)
    return InputDocument(kind, tuple(out))


def _frac(x: Fraction) -> str | int:
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _divisor_json(d: PPDivisor) -> dict:
    coeffs = []
    for label, c in d.coefficients.items():
        if c is EMPTY:
            coeffs.append({"point": label, "empty": True})
        else:
            coeffs.append({"point": label, "points": [[_frac(x) for x in p] for p in c.points]})
    return {"tail": [list(g) for g in d.tail.generators], "coefficients": coeffs}


def to_json(doc: InputDocument) -> dict:
    """Canonical JSON form; serializing a reparsed canonical document is a fixed point."""
    v = doc.value
    if doc.kind == "ppdivisor":
        return {"kind": "ppdivisor", "rank_k": v.rank_k, **_divisor_json(v)}
    if doc.kind == "divisorial_fan":
        return {"kind": "divisorial_fan", "rank_k": v.rank_k, "members": [_divisor_json(d) for d in v.members]}
    if doc.kind == "fan":
        return {"kind": "fan", "rank": v.ambient_rank, "cones": [[list(g) for g in c.generators] for c in v.cones]}
    if doc.kind == "presentation":
        return {"kind": "presentation", "generators": list(v.generators), "relators": [format_word(r) for r in v.relators]}
    return {"kind": "cstar_bundle", "points": [{"e": e, "m": m} for e, m in v]}


def serialize(doc: InputDocument) -> str:
    return json.dumps(to_json(doc), sort_keys=True)
