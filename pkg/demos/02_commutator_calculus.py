"""The term-condition commutator: rings multiply, lattices intersect.

Run with: python demos/02_commutator_calculus.py
"""

from math import gcd

from congruence_lab import (
    annihilator,
    commutator,
    commutator_stabilization,
    con_lattice,
    iterated_commutator,
    residuation,
    surrogate_checks,
)
from congruence_lab.builders import (
    diamond,
    pentagon,
    pointed_pair,
    ring_congruence,
    ring_zn,
)

print("=" * 66)
print("On Z_n the commutator of theta_d and theta_e is theta_gcd(de, n):")
print("the congruence analogue of multiplying ideals.")
print("=" * 66)

z12 = ring_zn(12)
for d, e in [(2, 2), (2, 3), (4, 6), (6, 6)]:
    value = commutator(z12, ring_congruence(z12, d), ring_congruence(z12, e))
    print(f"   [theta_{d}, theta_{e}] on Z_12 = {value}"
          f"   (theta_{gcd(d * e, 12)})")

print("\nOn lattice algebras the commutator collapses to intersection:")
for alg in (pentagon(), diamond()):
    lattice = con_lattice(alg)
    agree = all(
        commutator(alg, a, b).blocks
        == lattice.congruences[lattice.meet_index(lattice.index(a), lattice.index(b))].blocks
        for a in lattice.congruences
        for b in lattice.congruences
    )
    print(f"   {alg.name}: [a, b] = a ^ b for all {len(lattice)}^2 pairs: {agree}")

print("\n" + "=" * 66)
print("Iterates [a, a]^n are decreasing and stabilize.")
print("=" * 66)

t2 = ring_congruence(z12, 2)
for n in range(4):
    print(f"   [theta_2, theta_2]^{n} on Z_12 = {iterated_commutator(z12, t2, n)}")
stable, index = commutator_stabilization(z12, t2)
print(f"   stable value {stable} reached at n = {index}")

z4 = ring_zn(4)
t2 = ring_congruence(z4, 2)
print(f"\n   On Z_4 the square of theta_2 is already the bottom: "
      f"{iterated_commutator(z4, t2, 1)}   (2Z_4 squared = 0)")

print("\n" + "=" * 66)
print("Residuation and annihilators.")
print("=" * 66)

z6 = ring_zn(6)
t2, t3 = ring_congruence(z6, 2), ring_congruence(z6, 3)
print(f"   theta_2 -> bottom on Z_6 = {annihilator(z6, t2)}   (theta_3)")
print(f"   theta_3 -> bottom on Z_6 = {annihilator(z6, t3)}   (theta_2)")
arrow = residuation(z12, ring_congruence(z12, 2), ring_congruence(z12, 4))
print(f"   theta_2 -> theta_4 on Z_12 = {arrow}")

print("\n" + "=" * 66)
print("Hypothesis surrogates: what the theory needs from one finite algebra.")
print("=" * 66)

for alg in (z12, pentagon(), pointed_pair()):
    rep = surrogate_checks(alg)
    verdict = "pass" if rep.ok else f"FAIL: {'; '.join(rep.failures())}"
    print(f"   {alg.name:14s} modular={rep.modular} "
          f"[nabla,nabla]=nabla: {rep.top_idempotent}  -> {verdict}")
print("\nA bare pointed set has too few operations: its total congruence")
print("is not idempotent, and every theory-dependent analysis refuses it.")
