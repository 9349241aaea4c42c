"""Boolean centers, CBLP, and where lifting genuinely fails.

Run with: python demos/04_boolean_lifting.py
"""

from congruence_lab import (
    boolean_center_of_congruences,
    cblp_characterization,
    con_lattice,
    has_cblp,
    has_id_blp,
    is_b_normal,
    lift_orthogonal,
    orthogonal_uniqueness_and_atoms,
    quotient,
    spectrum,
)
from congruence_lab.builders import diamond, kite, pentagon, ring_congruence, ring_zn
from congruence_lab.congruences import congruence_from_blocks
from congruence_lab.lattices import lattice_from_leq, principal_ideal

print("=" * 66)
print("Boolean centers: complemented congruences = idempotents.")
print("=" * 66)

z12 = ring_zn(12)
center = boolean_center_of_congruences(z12)
print(f"\nB(Con(Z_12)) = {{{', '.join(str(c) for c in center.elements)}}}")
print("atoms:", ", ".join(str(a) for a in center.atoms))
print("Z_12 has idempotents {0, 1, 4, 9}: four, matching |B(Con)|.")

print("\n" + "=" * 66)
print("CBLP: pulling complemented congruences back along projections.")
print("=" * 66)

t6 = ring_congruence(z12, 6)
report = has_cblp(z12, t6)
print(f"\ntheta_6 on Z_12: cblp = {report.cblp}")
for target, lift in report.witnesses:
    print(f"   {target}  lifts to  {lift}")

print("\nThe four equivalent characterizations agree:")
full = cblp_characterization(z12, t6)
print("   ", full.thm63)
print("regular part theta_6-diamond =", full.diamond, " regular =", full.regular)

print("\nEvery congruence of every Z_n (n <= 16) lifts: finite rings behave.")
print("B-normality is the algebra-wide reformulation:",
      is_b_normal(z12).b_normal)

print("\n" + "=" * 66)
print("Orthogonal families lift uniquely below the radical.")
print("=" * 66)

quo = quotient(z12, t6)
atoms = [
    congruence_from_blocks(quo, [x % 2 for x in range(6)]),
    congruence_from_blocks(quo, [x % 3 for x in range(6)]),
]
lifted = lift_orthogonal(z12, t6, atoms)
print("\natoms of B(Con(Z_12/theta_6)) lift to:",
      ", ".join(str(c) for c in lifted))
rep = orthogonal_uniqueness_and_atoms(z12, t6)
print(f"unique = {rep.unique_lifts}, orthogonal = {rep.lifts_orthogonal}, "
      f"atoms to atoms = {rep.atoms_lift_to_atoms}")

print("\n" + "=" * 66)
print("Where lifting fails.")
print("=" * 66)

k = kite()
meet = k.operation("meet")
lat = lattice_from_leq(
    [[meet.apply(5, (a, b)) == a for b in range(5)] for a in range(5)]
)
result = has_id_blp(lat, principal_ideal(lat, 1))
print(f"\nkite = 2x2 with a new bottom; ideal (x]: Id-BLP = {result.lifts}")
print("   quotient class", result.counterexample,
      "is complemented but nothing complemented sits above it.")

n5 = pentagon()
rad = spectrum(n5).rad
print(f"\npentagon N5: Rad = {rad}")
print("   N5/Rad is the Boolean square with 4 complemented congruences;")
print("   B(Con(N5)) = {bottom, top}, so Rad(N5) cannot lift:",
      "cblp =", has_cblp(n5, rad).cblp)
print("   b-normal(N5) =", is_b_normal(n5).b_normal,
      "(equivalent to algebra-wide CBLP, and equally false)")
print("\nThe diamond M3 is simple, so it lifts trivially:",
      all(has_cblp(diamond(), c).cblp for c in con_lattice(diamond()).congruences))
