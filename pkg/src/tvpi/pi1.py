"""Fundamental-group presentations of toric and complexity-one T-varieties.

Torus generators are ``t`` (rank 1) or ``t1 .. tk``; one ``b`` generator per
special point of P^1, numbered in point order. Every relator carries a
provenance tag saying which lattice or relation produced it.
"""
from __future__ import annotations

import math
from typing import Callable, Sequence

from .divisorial import (
    EMPTY,
    DivisorError,
    DivisorialFanP1,
    PPDivisor,
    ProperVerdict,
    cone_over_point,
    is_proper,
)
from .fpgroup import Presentation, Word, commutator, reduce_word
from .lattice import AbelianInvariants, LatticeBasis, quotient_invariants, saturate
from .polyhedral import Cone, Fan, PolyhedralError

BasisTransform = Callable[[list[list[int]]], list[list[int]]]

RAYS = "rays"
ALL_FACES = "all"


class ImproperDivisorError(DivisorError):
    def __init__(self, verdict: ProperVerdict, which: str = "divisor"):
        super().__init__(f"{which} is not proper: {verdict}")
        self.verdict = verdict


def torus_names(k: int) -> list[str]:
    return ["t"] if k == 1 else [f"t{i}" for i in range(1, k + 1)]


def point_names(r: int) -> list[str]:
    return [f"b{j}" for j in range(1, r + 1)]


def monomial(tnames: Sequence[str], w: Sequence[int], b: str | None = None, v1: int = 0) -> Word:
    syl = [(t, e) for t, e in zip(tnames, w)]
    if b is not None:
        syl.append((b, v1))
    return reduce_word(syl)


def cone_lattice_basis(c: Cone, transform: BasisTransform | None = None) -> list[list[int]]:
    """A basis of the lattice generated by the lattice points of ``c``.

    Rays use their primitive generator; larger cones the HNF basis of the
    saturated span.
    """
    if c.is_zero:
        return []
    if c.is_pointed and len(c.rays) == 1:
        basis = [list(c.rays[0])]
    else:
        basis = [list(v) for v in saturate(list(c.generators), c.ambient_rank).basis]
    return transform(basis) if transform else basis


class _Builder:
    def __init__(self, generators: list[str]):
        self.generators = generators
        self.relators: list[Word] = []
        self.tags: list[str] = []
        self.notes: list[str] = []
        self._seen: set[Word] = set()

    def add(self, w: Word, tag: str) -> None:
        w = reduce_word(w)
        if not w or w in self._seen:
            return
        self._seen.add(w)
        self.relators.append(w)
        self.tags.append(tag)

    def build(self) -> Presentation:
        return Presentation(tuple(self.generators), tuple(self.relators), tuple(self.tags), tuple(self.notes))


def _cone_label(c: Cone) -> str:
    return "<" + ", ".join("(" + ",".join(map(str, r)) + ")" for r in c.generators) + ">"


def toric_pi1_invariants(f: Fan) -> AbelianInvariants:
    """``N / N_Sigma``, with ``N_Sigma`` generated by the saturated lattices of all cones."""
    f.require_pointed()
    rows: list[list[int]] = []
    for c in f.face_closure():
        rows.extend(cone_lattice_basis(c))
    return quotient_invariants(f.ambient_rank, rows)


def toric_pi1_presentation(f: Fan, transform: BasisTransform | None = None) -> Presentation:
    f.require_pointed()
    t = torus_names(f.ambient_rank)
    b = _Builder(list(t))
    for i in range(len(t)):
        for j in range(i + 1, len(t)):
            b.add(commutator(t[i], t[j]), "commutator")
    for c in f.face_closure():
        for n in cone_lattice_basis(c, transform):
            b.add(monomial(t, n), f"cone lattice {_cone_label(c)}")
    return b.build()


def _check_proper(d: PPDivisor, which: str) -> None:
    v = is_proper(d)
    if not v.is_proper:
        raise ImproperDivisorError(v, which)


def complexity_one_presentation(
    s: DivisorialFanP1 | PPDivisor,
    transform: BasisTransform | None = None,
    require_proper: bool = True,
) -> Presentation:
    """Presentation of the fundamental group of the variety of a divisorial fan on P^1.

    Relators: the product of the ``b``'s, all commutators involving a ``t``,
    the lattices of the tail cones, and for each member and special point a
    basis ``(v1, w)`` of the saturated lattice of the cone over that point,
    giving ``t^w b^v1``.
    """
    if isinstance(s, PPDivisor):
        s = DivisorialFanP1(s.rank_k, (s,))
    if require_proper:
        for i, d in enumerate(s.members):
            _check_proper(d, f"member {i}")
    k = s.rank_k
    points = s.points
    if not points:
        return toric_pi1_presentation(Fan(k, tuple(s.tail_cones)), transform)
    t = torus_names(k)
    bs = point_names(len(points))
    out = _Builder(t + bs)
    out.notes.extend(s.warnings)
    out.add(tuple((x, 1) for x in bs), "product relation")
    for i in range(k):
        for j in range(i + 1, k):
            out.add(commutator(t[i], t[j]), "commutator")
    for ti in t:
        for bj in bs:
            out.add(commutator(ti, bj), "commutator")
    for c in s.tail_cones:
        for n in cone_lattice_basis(c, transform):
            out.add(monomial(t, n), "tail-fan lattice")
    for d in s.members:
        for label, bj in zip(points, bs):
            if d.coefficient(label) is EMPTY:
                continue
            cone = cone_over_point(d, label)
            for v in cone_lattice_basis(cone, transform):
                out.add(monomial(t, v[1:], bj, v[0]), f"point {label} lattice")
    return out.build()


def _contains_rays(face: Cone, rays: Sequence) -> bool:
    return bool(rays) and set(rays) <= set(face.rays)


def local_pi1_presentation(
    d: PPDivisor,
    faces: str = RAYS,
    transform: BasisTransform | None = None,
    require_proper: bool = True,
) -> Presentation:
    """Presentation for the variety with its vertex removed.

    ``faces="rays"`` uses the rays of the tail cone (when they are proper
    faces) and the rays of each cone over a point off the tail hyperplane.
    ``faces="all"`` uses lattice bases of every face that survives removal of
    the vertex, and notes faces whose saturated lattice is larger than the
    lattice of their rays.
    """
    if faces not in (RAYS, ALL_FACES):
        raise ValueError(f"faces must be {RAYS!r} or {ALL_FACES!r}")
    if require_proper:
        _check_proper(d, "divisor")
    if d.tail.is_zero:
        return complexity_one_presentation(d, transform, require_proper=False)
    if not d.tail.is_full_dimensional:
        raise DivisorError("local presentation needs a full-dimensional or zero tail cone")
    if not d.tail.is_pointed:
        raise PolyhedralError("local presentation needs a pointed tail cone")
    if not d.has_complete_locus:
        raise DivisorError("local presentation needs a complete locus")
    k = d.rank_k
    points = d.support
    t = torus_names(k)
    bs = point_names(len(points))
    out = _Builder(t + bs)
    if bs:
        out.add(tuple((x, 1) for x in bs), "product relation")
    for i in range(k):
        for j in range(i + 1, k):
            out.add(commutator(t[i], t[j]), "commutator")
    for ti in t:
        for bj in bs:
            out.add(commutator(ti, bj), "commutator")

    if faces == RAYS:
        if k >= 2:
            for ray in d.tail.rays:
                out.add(monomial(t, ray), "tail ray")
        for label, bj in zip(points, bs):
            for ray in cone_over_point(d, label).rays:
                if ray[0] > 0:
                    out.add(monomial(t, ray[1:], bj, ray[0]), f"point {label} ray")
        return out.build()

    for face in d.tail.proper_faces():
        _note_unsaturated(out, face, "tail")
        for n in cone_lattice_basis(face, transform):
            out.add(monomial(t, n), "tail face lattice")
    for label, bj in zip(points, bs):
        cone = cone_over_point(d, label)
        bottom = [r for r in cone.rays if r[0] == 0]
        for face in cone.proper_faces():
            if _contains_rays(face, bottom):
                continue
            _note_unsaturated(out, face, f"point {label}")
            for v in cone_lattice_basis(face, transform):
                out.add(monomial(t, v[1:], bj, v[0]), f"point {label} face lattice")
    return out.build()


def _note_unsaturated(out: _Builder, face: Cone, where: str) -> None:
    if len(face.rays) < 2:
        return
    ray_lattice = LatticeBasis.from_generators(face.rays, face.ambient_rank)
    sat = saturate(face.rays, face.ambient_rank)
    if ray_lattice != sat:
        extra = [v for v in sat.basis if not ray_lattice.contains(v)]
        out.notes.append(
            f"{where} face {_cone_label(face)}: saturated lattice exceeds the ray lattice; "
            f"extra basis vectors {[list(v) for v in extra]} are not available in rays mode"
        )


def cstar_bundle_presentation(points: Sequence[tuple[int, int]]) -> Presentation:
    """``< b_1..b_r, t | b_1..b_r, [b_i, t], t^e_i b_i^m_i >`` for fibers ``e_i / m_i``."""
    for e, m in points:
        if not isinstance(e, int) or not isinstance(m, int) or m <= 0:
            raise DivisorError(f"fiber data ({e}, {m}) needs integers with m > 0")
        if math.gcd(e, m) != 1:
            raise DivisorError(f"fraction {e}/{m} is not in lowest terms")
    bs = point_names(len(points))
    out = _Builder(bs + ["t"])
    if bs:
        out.add(tuple((x, 1) for x in bs), "product relation")
    for bj in bs:
        out.add(commutator(bj, "t"), "commutator")
    for bj, (e, m) in zip(bs, points):
        out.add((("t", e), (bj, m)), f"fiber {e}/{m}")
    return out.build()

