"""The standalone finite-lattice toolkit."""

import pytest

from congruence_lab import (
    MalformedDoc,
    NotALattice,
    all_ideals,
    lattice_from_leq,
    maximal_ideals,
    parse_lattice,
    prime_ideals,
    principal_ideal,
    quotient_by_ideal,
    serialize_lattice,
)
from congruence_lab.lattices import (
    LatticeIdeal,
    complemented_elements,
    is_prime_ideal,
    lattice_center,
)


def chain(k):
    return lattice_from_leq([[a <= b for b in range(k)] for a in range(k)])


def boolean(k):
    n = 2**k
    return lattice_from_leq([[a & b == a for b in range(n)] for a in range(n)])


def kite_lattice():
    # 0 < 1 < {2, 3} < 4
    le = {
        (0, 0), (0, 1), (0, 2), (0, 3), (0, 4),
        (1, 1), (1, 2), (1, 3), (1, 4),
        (2, 2), (2, 4), (3, 3), (3, 4), (4, 4),
    }
    return lattice_from_leq([[(a, b) in le for b in range(5)] for a in range(5)])


def m3_lattice():
    le = {(0, b) for b in range(5)} | {(a, a) for a in range(5)} | {
        (1, 4), (2, 4), (3, 4)
    }
    return lattice_from_leq([[(a, b) in le for b in range(5)] for a in range(5)])


def test_lattice_from_leq_validates():
    with pytest.raises(NotALattice):
        lattice_from_leq([[True, False], [False, False]])  # not reflexive
    with pytest.raises(NotALattice):
        lattice_from_leq([[True, True], [True, True]])  # not antisymmetric
    with pytest.raises(NotALattice):
        # 4-element poset with two incomparable tops
        lattice_from_leq(
            [
                [True, False, True, True],
                [False, True, True, True],
                [False, False, True, False],
                [False, False, False, True],
            ]
        )


def test_join_meet_tables():
    b = boolean(2)
    assert b.join(1, 2) == 3
    assert b.meet(1, 2) == 0
    assert b.bottom == 0 and b.top == 3
    assert b.is_distributive()
    assert not m3_lattice().is_distributive()


def test_serialize_roundtrip():
    for lat in [chain(3), boolean(2), kite_lattice()]:
        doc = serialize_lattice(lat)
        assert parse_lattice(doc) == lat
    with pytest.raises(MalformedDoc):
        parse_lattice({"size": 2})


def test_ideals_are_principal_downsets():
    lat = kite_lattice()
    ideals = all_ideals(lat)
    assert len(ideals) == lat.size
    for ideal in ideals:
        members = ideal.members()
        g = ideal.generator()
        assert members == [x for x in range(lat.size) if lat.le(x, g)]


def test_ideal_validation():
    lat = boolean(2)
    with pytest.raises(NotALattice):
        LatticeIdeal(lat, (False, False, False, False))  # empty
    with pytest.raises(NotALattice):
        LatticeIdeal(lat, (False, True, False, False))  # not a down-set
    with pytest.raises(NotALattice):
        LatticeIdeal(lat, (True, True, True, False))  # not join-closed


def test_prime_ideals_of_boolean_square():
    lat = boolean(2)
    primes = prime_ideals(lat)
    assert len(primes) == 2
    assert {frozenset(p.members()) for p in primes} == {
        frozenset({0, 1}),
        frozenset({0, 2}),
    }


def test_prime_ideals_of_chain():
    lat = chain(2)
    primes = prime_ideals(lat)
    assert len(primes) == 1 and primes[0].members() == [0]
    # longer chains: every proper principal ideal is prime
    assert len(prime_ideals(chain(4))) == 3


def test_maximal_ideals():
    lat = boolean(2)
    maxes = maximal_ideals(lat)
    assert {frozenset(m.members()) for m in maxes} == {
        frozenset({0, 1}),
        frozenset({0, 2}),
    }
    assert all(is_prime_ideal(m) for m in maxes)


def test_quotient_by_ideal_kite():
    lat = kite_lattice()
    quo, class_of = quotient_by_ideal(principal_ideal(lat, 1))
    assert quo.size == 4
    assert class_of[0] == class_of[1]  # 0 and the collapsed middle merge
    assert quo.is_distributive()
    assert len(lattice_center(quo)) == 4  # quotient is the Boolean square


def test_quotient_by_trivial_and_total_ideal():
    lat = boolean(2)
    quo, class_of = quotient_by_ideal(principal_ideal(lat, lat.bottom))
    assert quo.size == lat.size and class_of == list(range(lat.size))
    quo, _ = quotient_by_ideal(principal_ideal(lat, lat.top))
    assert quo.size == 1


def test_complemented_elements():
    assert lattice_center(boolean(2)) == [0, 1, 2, 3]
    assert lattice_center(kite_lattice()) == [0, 4]
    assert lattice_center(chain(3)) == [0, 2]
    with pytest.raises(NotALattice):
        complemented_elements(m3_lattice())  # complements not unique


def test_atoms():
    assert boolean(2).atoms() == [1, 2]
    assert chain(3).atoms() == [1]
