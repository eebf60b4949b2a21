"""Exact rational convex geometry in generator form.

Cones are kept as primitive integer generators: extreme rays plus a basis of
the lineality space. Duals and canonical forms come from a double
description pass over integer vectors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .lattice import IntVector, hnf, primitive, saturate

RatVector = tuple[Fraction, ...]


class PolyhedralError(ValueError):
    pass


def as_rational_vector(v: Iterable, rank: int | None = None) -> RatVector:
    out = []
    for x in v:
        if isinstance(x, float):
            raise TypeError("floating point coordinates are not accepted")
        out.append(Fraction(x))
    if rank is not None and len(out) != rank:
        raise PolyhedralError(f"expected a vector of length {rank}, got {len(out)}")
    return tuple(out)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def _prim(v: Sequence[int]) -> IntVector:
    g = math.gcd(*v)
    return tuple(x // g for x in v) if g else tuple(v)


def _double_description(inequalities: Sequence[Sequence[int]], n: int):
    """Generators of ``{x : <a, x> >= 0 for all a}`` in ``Q^n``.

    Returns ``(lineality, rays)`` as primitive integer vectors; rays are
    minimal modulo the lineality space.
    """
    lin: list[IntVector] = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays: list[IntVector] = []
    zero_sets: list[set[int]] = []
    for k, a in enumerate(inequalities):
        a = tuple(a)
        if not any(a):
            continue
        pivot = next((l for l in lin if dot(a, l) != 0), None)
        if pivot is not None:
            s = dot(a, pivot)
            if s < 0:
                pivot, s = tuple(-x for x in pivot), -s
            new_lin = []
            for l in lin:
                if l is pivot or l == tuple(-x for x in pivot):
                    continue
                w = _prim(tuple(s * x - dot(a, l) * y for x, y in zip(l, pivot)))
                if any(w):
                    new_lin.append(w)
            lin = new_lin
            rays = [_prim(tuple(s * x - dot(a, r) * y for x, y in zip(r, pivot))) for r in rays]
            zero_sets = [z | {k} for z in zero_sets]
            rays.append(pivot)
            zero_sets.append(set(range(k)))
            continue
        vals = [dot(a, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        new_rays = [rays[i] for i in pos + zer]
        new_zero = [zero_sets[i] for i in pos] + [zero_sets[i] | {k} for i in zer]
        for p in pos:
            for q in neg:
                common = zero_sets[p] & zero_sets[q]
                adjacent = not any(
                    common <= zero_sets[r] for r in range(len(rays)) if r != p and r != q
                )
                if not adjacent:
                    continue
                w = _prim(tuple(vals[p] * y - vals[q] * x for x, y in zip(rays[p], rays[q])))
                new_rays.append(w)
                new_zero.append(common | {k})
        rays, zero_sets = new_rays, new_zero
    return lin, rays


def _project_out(v: Sequence[int], basis: Sequence[Sequence[int]]) -> IntVector:
    """Primitive integer direction of ``v`` projected orthogonally to ``span(basis)``."""
    if not basis:
        return _prim(tuple(v))
    m = len(basis)
    gram = [[Fraction(dot(b, c)) for c in basis] for b in basis]
    rhs = [Fraction(dot(b, v)) for b in basis]
    coeffs = _solve(gram, rhs)
    w = [Fraction(x) - sum(coeffs[i] * basis[i][j] for i in range(m)) for j, x in enumerate(v)]
    if not any(w):
        return tuple(0 for _ in v)
    return primitive(w)


def _solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Solve a nonsingular rational system by Gauss-Jordan elimination."""
    n = len(a)
    m = [row[:] + [rhs] for row, rhs in zip(a, b)]
    for c in range(n):
        p = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]


def _canonical(n: int, lin: Sequence[IntVector], rays: Sequence[IntVector]):
    lin_basis = tuple(tuple(r) for r in saturate(lin, n).basis) if lin else ()
    proj = {_project_out(r, lin_basis) for r in rays}
    proj.discard(tuple(0 for _ in range(n)))
    return lin_basis, tuple(sorted(proj))


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone, stored canonically.

    ``rays`` are the primitive extreme rays of the cone intersected with the
    orthogonal complement of its lineality space; ``lineality`` is the HNF
    basis of the lattice points of that space. Pointed cones have empty
    lineality. Build instances with :meth:`from_generators`.
    """

    ambient_rank: int
    rays: tuple[IntVector, ...] = ()
    lineality: tuple[IntVector, ...] = ()

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence], ambient_rank: int) -> "Cone":
        gens = []
        for g in generators:
            v = as_rational_vector(g, ambient_rank)
            if any(v):
                gens.append(primitive(v))
        if not gens:
            return cls(ambient_rank)
        dlin, drays = _double_description(gens, ambient_rank)
        ineq = list(drays) + list(dlin) + [tuple(-x for x in l) for l in dlin]
        lin, rays = _double_description(ineq, ambient_rank)
        return cls(ambient_rank, *reversed(_canonical(ambient_rank, lin, rays)))

    @classmethod
    def zero(cls, ambient_rank: int) -> "Cone":
        return cls(ambient_rank)

    @classmethod
    def full_space(cls, ambient_rank: int) -> "Cone":
        return cls(ambient_rank, (), tuple(tuple(int(i == j) for j in range(ambient_rank)) for i in range(ambient_rank)))

    @property
    def generators(self) -> tuple[IntVector, ...]:
        return self.rays + self.lineality + tuple(tuple(-x for x in l) for l in self.lineality)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_zero(self) -> bool:
        return not self.rays and not self.lineality

    @cached_property
    def dim(self) -> int:
        return len(hnf(list(self.rays) + list(self.lineality)))

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_rank

    @cached_property
    def dual(self) -> "Cone":
        """``{u : <u, v> >= 0 for all v in the cone}``."""
        if self.is_zero:
            return Cone.full_space(self.ambient_rank)
        lin, rays = _double_description(self.generators, self.ambient_rank)
        return Cone(self.ambient_rank, *reversed(_canonical(self.ambient_rank, lin, rays)))

    def contains(self, v: Sequence) -> bool:
        v = as_rational_vector(v, self.ambient_rank)
        return all(dot(u, v) >= 0 for u in self.dual.generators)

    def relative_interior_point(self) -> IntVector:
        return tuple(sum(col) for col in zip(*self.generators)) if self.generators else (0,) * self.ambient_rank

    def require_pointed(self, what: str = "this operation") -> None:
        if not self.is_pointed:
            raise PolyhedralError(f"{what} requires a pointed cone")

    def faces(self) -> list["Cone"]:
        """All faces of a pointed cone, including the cone and the zero cone."""
        self.require_pointed("face enumeration")
        n = len(self.rays)
        full = frozenset(range(n))
        normals = self.dual.rays
        found = {full}
        frontier = [full]
        facets = {frozenset(i for i in range(n) if dot(u, self.rays[i]) == 0) for u in normals}
        facets.discard(full)
        while frontier:
            nxt = []
            for f in frontier:
                for g in facets:
                    h = f & g
                    if h not in found:
                        found.add(h)
                        nxt.append(h)
            frontier = nxt
        faces = [Cone(self.ambient_rank, tuple(self.rays[i] for i in sorted(s))) for s in found]
        return sorted(faces, key=lambda c: (len(c.rays), c.rays))

    def proper_faces(self) -> list["Cone"]:
        return [f for f in self.faces() if f.rays != self.rays]

    def __str__(self) -> str:
        body = ", ".join(str(list(r)) for r in self.generators)
        return f"<{body}>"


def dual_cone(c: Cone) -> Cone:
    return c.dual


def rays(c: Cone) -> tuple[IntVector, ...]:
    c.require_pointed("rays")
    return c.rays


def proper_faces(c: Cone) -> list[Cone]:
    return c.proper_faces()


@dataclass(frozen=True)
class Polyhedron:
    """``conv(points) + tail``. The tail is supplied, never inferred."""

    ambient_rank: int
    points: tuple[RatVector, ...]
    tail: Cone = field(default=None)

    def __post_init__(self):
        if not self.points:
            raise PolyhedralError("a polyhedron needs at least one point")
        pts = tuple(sorted({as_rational_vector(p, self.ambient_rank) for p in self.points}))
        object.__setattr__(self, "points", pts)
        if self.tail is None:
            object.__setattr__(self, "tail", Cone.zero(self.ambient_rank))
        elif self.tail.ambient_rank != self.ambient_rank:
            raise PolyhedralError("tail cone rank does not match the polyhedron")

    @classmethod
    def point(cls, v: Sequence, tail: Cone | None = None) -> "Polyhedron":
        v = as_rational_vector(v)
        return cls(len(v), (v,), tail)

    def support_min(self, u: Sequence) -> Fraction:
        """``min <u, x>`` over the polyhedron; ``u`` must lie in the dual of the tail."""
        u = as_rational_vector(u, self.ambient_rank)
        if not self.tail.dual.contains(u):
            raise PolyhedralError(f"unbounded below: {list(map(str, u))} is not in the dual of the tail")
        return min(dot(u, p) for p in self.points)

    @cached_property
    def homogenization(self) -> Cone:
        """The cone over ``{1} x P`` in ``Q x Q^k``."""
        gens = [(Fraction(1),) + p for p in self.points]
        gens += [(0,) + tuple(g) for g in self.tail.generators]
        return Cone.from_generators(gens, self.ambient_rank + 1)

    def vertices(self) -> tuple[RatVector, ...]:
        self.tail.require_pointed("vertex enumeration")
        out = []
        for r in self.homogenization.rays:
            if r[0] > 0:
                out.append(tuple(Fraction(x, r[0]) for x in r[1:]))
        return tuple(sorted(out))

    def contains(self, x: Sequence) -> bool:
        x = as_rational_vector(x, self.ambient_rank)
        return self.homogenization.contains((1,) + x)

    def equals_tail(self) -> bool:
        """Whether the polyhedron is the tail cone itself."""
        zero = (0,) * self.ambient_rank
        return self.contains(zero) and all(self.tail.contains(p) for p in self.points)

    def translate(self, v: Sequence) -> "Polyhedron":
        v = as_rational_vector(v, self.ambient_rank)
        return Polyhedron(self.ambient_rank, tuple(tuple(a + b for a, b in zip(p, v)) for p in self.points), self.tail)

    def __str__(self) -> str:
        pts = ", ".join("(" + ", ".join(str(x) for x in p) + ")" for p in self.points)
        if self.tail.is_zero:
            return f"conv({pts})"
        return f"conv({pts}) + {self.tail}"


def support_min(p: Polyhedron, u: Sequence) -> Fraction:
    return p.support_min(u)


def minkowski_sum(a: Polyhedron, b: Polyhedron) -> Polyhedron:
    """Pairwise sums of points; no hull reduction."""
    if a.ambient_rank != b.ambient_rank:
        raise PolyhedralError("Minkowski sum of polyhedra of different ambient rank")
    if a.tail != b.tail:
        if len(b.points) == 1 and b.tail.is_zero:
            return a.translate(b.points[0])
        if len(a.points) == 1 and a.tail.is_zero:
            return b.translate(a.points[0])
        raise PolyhedralError("Minkowski sum requires equal tails or a point operand")
    pts = tuple(tuple(x + y for x, y in zip(p, q)) for p, q in product(a.points, b.points))
    return Polyhedron(a.ambient_rank, pts, a.tail)


@dataclass(frozen=True)
class Fan:
    """A collection of cones. Face and intersection axioms are not checked."""

    ambient_rank: int
    cones: tuple[Cone, ...]

    def __post_init__(self):
        for c in self.cones:
            if c.ambient_rank != self.ambient_rank:
                raise PolyhedralError("fan cone has the wrong ambient rank")

    @classmethod
    def from_generators(cls, ambient_rank: int, cones: Iterable[Iterable[Sequence]]) -> "Fan":
        return cls(ambient_rank, tuple(Cone.from_generators(g, ambient_rank) for g in cones))

    def require_pointed(self) -> None:
        for c in self.cones:
            if not c.is_pointed:
                raise PolyhedralError(f"fan cone {c} contains a line")

    def face_closure(self) -> list[Cone]:
        """Listed cones together with all their faces, deduplicated and sorted."""
        self.require_pointed()
        seen = {}
        for c in self.cones:
            for f in c.faces():
                seen.setdefault(f.rays, f)
        return [seen[k] for k in sorted(seen, key=lambda r: (len(r), r))]
