"""Prime congruences, radicals, and the reticulation lattice.

Run with: python demos/03_spectrum_and_reticulation.py
"""

from congruence_lab import (
    build_reticulation,
    check_spec_homeomorphism,
    con_lattice,
    costar,
    ideal_spectra,
    is_semiprime,
    lambda_,
    radical,
    radical_oracle,
    spectrum,
    star,
    v_set,
)
from congruence_lab.builders import pentagon, ring_congruence, ring_zn
from congruence_lab.spectrum import clopens_of_max, d_set

print("=" * 66)
print("The prime spectrum of Z_12.")
print("=" * 66)

z12 = ring_zn(12)
data = spectrum(z12)
print("\nprimes:  ", ", ".join(str(p) for p in data.primes))
print("maximals:", ", ".join(str(m) for m in data.maximals))
print("Rad =", data.rad, "  nilradical =", data.nilradical)
print("semiprime(Z_12) =", is_semiprime(z12),
      "  semiprime(Z_6) =", is_semiprime(ring_zn(6)))

print("\nradical of theta_4 two independent ways:")
t4 = ring_congruence(z12, 4)
print("   meet of primes above:", radical(z12, t4))
print("   join of nilpotent-to-theta congruences:", radical_oracle(z12, t4))

print("\nbasic opens: D(theta) = primes not containing theta")
for d in (4, 6, 1):
    theta_d = ring_congruence(z12, d)
    print(f"   D(theta_{d}) = {d_set(z12, theta_d).members}, "
          f"V(theta_{d}) = {v_set(z12, theta_d)}")

print("\nclopens of Max(Z_12) with coprime witness pairs:")
for w in clopens_of_max(z12):
    print(f"   {str(w.members):8s} alpha={w.alpha}  beta={w.beta}")

print("\n" + "=" * 66)
print("The reticulation: the distributive shadow of Con(A).")
print("=" * 66)

retic = build_reticulation(z12)
print(f"\nL(Z_12) has {retic.lattice.size} elements (the radical congruences):")
for e in retic.elements:
    print("   ", e)
print("lambda maps every congruence to its radical:")
print("   lambda(theta_4) =", lambda_(retic, t4))

print("\nstar sends a congruence to an ideal of L(A); costar comes back:")
t2 = ring_congruence(z12, 2)
ideal = star(retic, t2)
print(f"   theta_2* = elements {ideal.members()} of L(Z_12)")
print("   (theta_2*)_* =", costar(retic, ideal))

primes, maxes = ideal_spectra(retic.lattice)
print(f"\nSpec_Id(L(Z_12)) has {len(primes)} prime ideals;"
      f" Spec(Z_12) has {len(data.primes)} primes.")
rep = check_spec_homeomorphism(z12)
print("star/costar are mutually inverse homeomorphisms:", rep.ok)

print("\nThe pentagon has a non-Boolean reticulation (the 5-element kite):")
n5 = pentagon()
retic5 = build_reticulation(n5)
print(f"   L(N5) size = {retic5.lattice.size}, "
      f"distributive = {retic5.lattice.is_distributive()}")
print("   spec homeomorphism:", check_spec_homeomorphism(n5).ok)
