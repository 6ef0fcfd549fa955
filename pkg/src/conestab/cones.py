"""Exact geometry of rational polyhedral cones in the integer plane.

Everything here runs on arbitrary-precision integers; no floating point is
involved.  A cone is the set of nonnegative real combinations of finitely
many integer generators, and in two dimensions every membership or
separation question reduces to sign tests on cross and dot products.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import index as _as_int
from typing import Iterable, Iterator

Vec2 = tuple[int, int]

ZERO: Vec2 = (0, 0)


def as_vec2(v) -> Vec2:
    """Coerce a length-2 sequence of integers to a plain tuple.

    Floats are rejected outright so no inexact value can sneak into the
    exact predicates.
    """
    x, y = v
    return (_as_int(x), _as_int(y))


def dot(u: Vec2, v: Vec2) -> int:
    return u[0] * v[0] + u[1] * v[1]


def cross(u: Vec2, v: Vec2) -> int:
    return u[0] * v[1] - u[1] * v[0]


def neg(v: Vec2) -> Vec2:
    return (-v[0], -v[1])


def perp(v: Vec2) -> Vec2:
    """Rotate a vector by +90 degrees."""
    return (-v[1], v[0])


def on_ray(a: Vec2, p: Vec2) -> bool:
    """True iff p lies on {t*a : t >= 0}, the cone of the single generator a."""
    if a == ZERO:
        return p == ZERO
    return cross(a, p) == 0 and dot(a, p) >= 0


def _in_pair_cone(a: Vec2, b: Vec2, p: Vec2) -> bool:
    """Membership of p in cone(a, b), including every degenerate shape.

    For independent a, b the 2x2 system p = s*a + t*b is solved by Cramer's
    rule and only the signs of the numerators matter.  Collinear pairs
    collapse to a ray or a line, which reduce to single-ray tests.
    """
    if p == ZERO:
        return True
    d = cross(a, b)
    if d == 0:
        # {0}, one ray, or (for opposite generators) the whole line; the
        # line case is exactly the union of the two rays.
        return on_ray(a, p) or on_ray(b, p)
    s = cross(p, b)  # s/d is the coefficient of a
    t = cross(a, p)  # t/d is the coefficient of b
    if d > 0:
        return s >= 0 and t >= 0
    return s <= 0 and t <= 0


def _in_dual(gens: Iterable[Vec2], alpha: Vec2) -> bool:
    """alpha pairs nonnegatively with every generator."""
    return all(dot(g, alpha) >= 0 for g in gens)


def strictly_separates(vectors: Iterable[Vec2]) -> Vec2 | None:
    """Find an integer direction pairing strictly positively with every input.

    Returns some alpha with <v, alpha> > 0 for all v, or None when no such
    direction exists.  The empty collection is separable by convention and
    yields (1, 0).  A zero vector in the input makes the problem infeasible.

    Candidates are drawn from the inputs themselves (which settles the
    collinear case), from the boundary rays of the dual cone (the +-90
    degree rotations of the inputs), and from sums of two such boundary
    rays, which reach the dual interior whenever it is nonempty.  Every
    candidate is verified before being returned, so the witness is always
    genuine.
    """
    vs = [as_vec2(v) for v in vectors]
    if not vs:
        return (1, 0)
    if any(v == ZERO for v in vs):
        return None

    def strict(alpha: Vec2) -> bool:
        return all(dot(v, alpha) > 0 for v in vs)

    for v in vs:
        if strict(v):
            return v
    boundary = []
    for v in vs:
        for q in (perp(v), neg(perp(v))):
            if _in_dual(vs, q):
                if strict(q):
                    return q
                boundary.append(q)
    for i, q in enumerate(boundary):
        for r in boundary[i + 1:]:
            s = (q[0] + r[0], q[1] + r[1])
            if strict(s):
                return s
    return None


@dataclass(frozen=True, eq=False)
class Cone2:
    """Convex cone in the plane spanned by integer generators.

    The generator list is kept verbatim (duplicates and zero vectors
    included); all predicates are about the generated set.  Equality is set
    equality of the cones, never equality of generator lists, so instances
    are unhashable.
    """

    generators: tuple[Vec2, ...] = ()

    def __post_init__(self):
        gens = tuple(as_vec2(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cone2):
            return NotImplemented
        return all(other.contains(g) for g in self.generators) and all(
            self.contains(g) for g in other.generators
        )

    __hash__ = None  # set semantics are incompatible with hashing by fields

    def _nonzero(self) -> list[Vec2]:
        return [g for g in self.generators if g != ZERO]

    def contains(self, p) -> bool:
        """Exact membership: is p a nonnegative combination of the generators?

        By Caratheodory's theorem for conical hulls a member of a planar
        cone already lies in the cone of at most two generators, so it is
        enough to scan generator pairs and solve each 2x2 system exactly.
        """
        p = as_vec2(p)
        if p == ZERO:
            return True
        gens = self.generators
        m = len(gens)
        if m == 0:
            return False
        if m == 1:
            return on_ray(gens[0], p)
        for i in range(m):
            a = gens[i]
            for j in range(i + 1, m):
                if _in_pair_cone(a, gens[j], p):
                    return True
        return False

    def interior_contains(self, p) -> bool:
        """Membership in the topological interior of the cone in R^2.

        A cone whose linear hull is a point or a line has empty interior.
        Otherwise p is a boundary point exactly when some supporting line
        through the origin passes through it, and for p != 0 any such line
        is p's own perpendicular; for p = 0 the cone must be all of R^2.
        """
        p = as_vec2(p)
        if self.linear_hull_dim() < 2:
            return False
        if not self.contains(p):
            return False
        nz = self._nonzero()
        if p == ZERO:
            # 0 is interior iff the cone is the whole plane, i.e. the dual
            # cone is trivial.  A nontrivial dual would contain a boundary
            # ray perpendicular to some generator.
            return not any(
                _in_dual(nz, q) for v in nz for q in (perp(v), neg(perp(v)))
            )
        q = perp(p)
        return not (_in_dual(nz, q) or _in_dual(nz, neg(q)))

    def has_apex(self) -> bool:
        """True iff some linear form is strictly positive on every nonzero generator.

        Decided combinatorially: the apex fails exactly when 0 is a convex
        combination of nonzero generators, which in the plane means either
        two opposite generators or a triple whose triangle surrounds the
        origin (Gordan's alternative plus Caratheodory).
        """
        nz = self._nonzero()
        n = len(nz)
        for i in range(n):
            u = nz[i]
            for j in range(i + 1, n):
                v = nz[j]
                if cross(u, v) == 0 and dot(u, v) < 0:
                    return False
        for i in range(n):
            u = nz[i]
            for j in range(i + 1, n):
                v = nz[j]
                c1 = cross(u, v)
                for k in range(j + 1, n):
                    w = nz[k]
                    c2 = cross(v, w)
                    c3 = cross(w, u)
                    if c1 == 0 and c2 == 0 and c3 == 0:
                        continue
                    if (c1 >= 0 and c2 >= 0 and c3 >= 0) or (
                        c1 <= 0 and c2 <= 0 and c3 <= 0
                    ):
                        return False
        return True

    def linear_hull_dim(self) -> int:
        """Dimension (0, 1 or 2) of the linear span of the generators."""
        nz = self._nonzero()
        if not nz:
            return 0
        d = nz[0]
        if all(cross(d, g) == 0 for g in nz[1:]):
            return 1
        return 2

    def caratheodory_pair(self, p) -> tuple[int, int] | None:
        """Indices (i, j), i <= j, of two generators whose cone contains p.

        The lexicographically smallest such pair is returned.  p = 0 in a
        generator-free cone yields None (there is nothing to index); a point
        outside the cone is a usage error and raises ValueError.
        """
        p = as_vec2(p)
        gens = self.generators
        if not gens:
            if p == ZERO:
                return None
            raise ValueError(f"point {p} is not in the cone")
        m = len(gens)
        for i in range(m):
            a = gens[i]
            for j in range(i, m):
                if _in_pair_cone(a, gens[j], p):
                    return (i, j)
        raise ValueError(f"point {p} is not in the cone")

    def __iter__(self) -> Iterator[Vec2]:
        return iter(self.generators)

    def __repr__(self) -> str:
        inner = ", ".join(repr(g) for g in self.generators)
        return f"Cone2(({inner}))"
