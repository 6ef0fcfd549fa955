#!/usr/bin/env python3
"""From a double-sided circle action to weights, stability and the moment map.

A pair of weight triples (wL, wR) for a two-torus acting on both sides of
a 3x3 unitary group translates into a weight datum on the quadric.  The
particular pair below reproduces the flag-variety datum, so the fan
condition holds and the moment map has a clean distinguished level.
"""

import random

from conestab import fan_condition, moment_map, weights_from_biquotient

w_left = ((1, 0), (1, 0), (1, 0))
w_right = ((0, 0), (0, 0), (1, 1))

datum = weights_from_biquotient(w_left, w_right)
print(f"wL = {list(w_left)}")
print(f"wR = {list(w_right)}")
print("derived weights:")
for i, (a, b) in enumerate(zip(datum.a, datum.b), start=1):
    print(f"  A{i} = {a}   B{i} = {b}   A{i}+B{i} = {(a[0] + b[0], a[1] + b[1])}")
print(f"  C  = {datum.c}")
print()

# The translation always satisfies the constant-sum constraint, and the
# fan condition is the hypothesis under which the quotient is smooth.
print(f"fan condition for the derived weights: {fan_condition(datum)}")
print()

# The moment map sends the distinguished point to C itself.
value = moment_map(datum, (1, 0, 0), (0, 1, 0))
print(f"moment map at z=(1,0,0), w=(0,1,0): phi={value.phi}, residual={value.residual}")
print()

# Sample a few unit-modulus torus translates of the same point: phi is
# invariant and the residual stays zero up to rounding.
rng = random.Random(7)
import cmath

z = (1 + 0j, 0j, 0j)
w = (0j, 1 + 0j, 0j)
for k in range(3):
    t1, t2 = rng.uniform(0, 2 * cmath.pi), rng.uniform(0, 2 * cmath.pi)
    g1, g2 = cmath.exp(1j * t1), cmath.exp(1j * t2)
    gz = tuple((g1**ax) * (g2**ay) * q for (ax, ay), q in zip(datum.a, z))
    gw = tuple((g1**bx) * (g2**by) * q for (bx, by), q in zip(datum.b, w))
    moved = moment_map(datum, gz, gw)
    print(
        f"translate {k}: phi=({moved.phi[0]:+.12f}, {moved.phi[1]:+.12f}) "
        f"residual={moved.residual:.3e}"
    )
