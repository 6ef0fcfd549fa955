"""Character-graded pieces of the coordinate ring of the quadric.

The ring is C[z_1..z_3, w_1..w_3] modulo the relation sum(z_i w_i); under
the lexicographic order with z_1 > w_1 > the rest, the relation has
leading monomial z_1 w_1, so the monomials not divisible by z_1 w_1 form a
vector-space basis of the quotient.  The dimension of the weight-(n c)
piece is therefore a lattice-point count, which is finite exactly when the
degree-0 invariants are trivial.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from conestab.cones import ZERO, Vec2, as_vec2, cross, dot, strictly_separates
from conestab.stability import WeightDatum, r0_is_trivial


@dataclass(frozen=True)
class Monomial:
    """Monomial z^k w^l with nonnegative integer exponent triples."""

    z_exp: tuple[int, int, int]
    w_exp: tuple[int, int, int]

    def __post_init__(self):
        k = tuple(int(e) for e in self.z_exp)
        l = tuple(int(e) for e in self.w_exp)
        if len(k) != 3 or len(l) != 3 or any(e < 0 for e in k + l):
            raise ValueError("exponents must be three nonnegative integers per block")
        object.__setattr__(self, "z_exp", k)
        object.__setattr__(self, "w_exp", l)

    def weight(self, datum: WeightDatum) -> Vec2:
        wx = wy = 0
        for e, (x, y) in zip(self.z_exp + self.w_exp, datum.weights()):
            wx += e * x
            wy += e * y
        return (wx, wy)

    def total_degree(self) -> int:
        return sum(self.z_exp) + sum(self.w_exp)

    def is_constant(self) -> bool:
        return self.total_degree() == 0

    def is_standard(self) -> bool:
        """Basis membership in the quotient: not divisible by z_1 w_1."""
        return not (self.z_exp[0] >= 1 and self.w_exp[0] >= 1)

    def __str__(self) -> str:
        parts = []
        for name, exps in (("z", self.z_exp), ("w", self.w_exp)):
            for i, e in enumerate(exps, start=1):
                if e == 1:
                    parts.append(f"{name}{i}")
                elif e > 1:
                    parts.append(f"{name}{i}^{e}")
        return "*".join(parts) if parts else "1"


def _solve_ray_multiple(w: Vec2, target: Vec2) -> int | None:
    """Nonnegative integer e with e*w == target, for nonzero w."""
    if w[0] != 0:
        e, r = divmod(target[0], w[0])
    else:
        e, r = divmod(target[1], w[1])
    if r != 0 or e < 0:
        return None
    if (e * w[0], e * w[1]) != target:
        return None
    return e


def graded_dim(datum: WeightDatum, degree: int) -> int:
    """Dimension of the weight-(degree * c) piece of the quotient ring.

    Counts exponent vectors (k, l) with sum(k_i a_i) + sum(l_j b_j) equal
    to degree * c, skipping multiples of z_1 w_1.  A strictly positive
    functional on the weights (which exists precisely when the degree-0
    invariants are trivial) bounds every exponent, so the count is a finite
    exact enumeration.  Degrees whose target weight is unreachable simply
    count zero.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if not r0_is_trivial(datum):
        raise ValueError(
            "graded dimensions are finite only when the degree-0 invariants are "
            "trivial (all weights nonzero and spanning a cone with apex); "
            "this datum admits a nonconstant invariant monomial"
        )
    f = strictly_separates(datum.weights())
    assert f is not None
    # weights ordered so that the z_1 and w_1 exponents are chosen first,
    # letting the z_1 w_1 exclusion prune whole subtrees immediately
    order = (
        datum.a[0],
        datum.b[0],
        datum.a[1],
        datum.a[2],
        datum.b[1],
    )
    fvals = [dot(f, w) for w in order]
    last = datum.b[2]
    budget = degree * dot(f, datum.c)
    if budget < 0:
        return 0
    target = (degree * datum.c[0], degree * datum.c[1])

    def count(idx: int, budget: int, rx: int, ry: int, z1_used: bool) -> int:
        if idx == 5:
            e = _solve_ray_multiple(last, (rx, ry))
            return 0 if e is None else 1
        w = order[idx]
        fv = fvals[idx]
        total = 0
        for e in range(budget // fv + 1):
            if idx == 1 and z1_used and e >= 1:
                break
            total += count(
                idx + 1,
                budget - e * fv,
                rx - e * w[0],
                ry - e * w[1],
                z1_used or (idx == 0 and e >= 1),
            )
        return total

    return count(0, budget, target[0], target[1], False)


def hilbert_table(datum: WeightDatum, n_max: int) -> list[int]:
    """Graded dimensions for degrees 0..n_max inclusive."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return [graded_dim(datum, n) for n in range(n_max + 1)]


def _monomial_from_coeffs(coeffs: dict[int, int]) -> Monomial:
    k = [0, 0, 0]
    l = [0, 0, 0]
    for idx, e in coeffs.items():
        if idx < 3:
            k[idx] = e
        else:
            l[idx - 3] = e
    return Monomial(z_exp=tuple(k), w_exp=tuple(l))


def find_invariant_monomial(datum: WeightDatum) -> Monomial | None:
    """A nonconstant monomial of weight (0, 0), or None when there is none.

    Searches for a nontrivial nonnegative rational relation among the six
    weights and scales it to integers.  In the plane a minimal relation is
    supported on a zero weight, an opposite pair, or a triple whose
    triangle surrounds the origin, so those three shapes are enumerated in
    a fixed order and the first hit is returned (with exponents reduced).
    The witness weight is re-verified before returning.
    """
    ws = datum.weights()

    def finish(coeffs: dict[int, int]) -> Monomial:
        g = 0
        for e in coeffs.values():
            g = gcd(g, e)
        m = _monomial_from_coeffs({i: e // g for i, e in coeffs.items()})
        assert m.weight(datum) == ZERO and not m.is_constant()
        return m

    for i, v in enumerate(ws):
        if v == ZERO:
            return finish({i: 1})
    for i in range(6):
        u = ws[i]
        for j in range(i + 1, 6):
            v = ws[j]
            if cross(u, v) == 0 and dot(u, v) < 0:
                if u[0] != 0:
                    p, q = abs(v[0]), abs(u[0])
                else:
                    p, q = abs(v[1]), abs(u[1])
                return finish({i: p, j: q})
    for i in range(6):
        u = ws[i]
        for j in range(i + 1, 6):
            v = ws[j]
            c1 = cross(u, v)
            for k in range(j + 1, 6):
                w = ws[k]
                c2 = cross(v, w)
                c3 = cross(w, u)
                if c1 == 0 and c2 == 0 and c3 == 0:
                    continue
                if c1 >= 0 and c2 >= 0 and c3 >= 0:
                    return finish({i: c2, j: c3, k: c1})
                if c1 <= 0 and c2 <= 0 and c3 <= 0:
                    return finish({i: -c2, j: -c3, k: -c1})
    return None
