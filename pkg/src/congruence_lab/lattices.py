"""Finite bounded lattices given by their order relation.

Used for the reticulation of an algebra and for standalone distributive
lattices in the ideal lifting machinery.  A lattice serializes as
``{"size": k, "leq": [[bool, ...], ...]}``.

Every ideal of a finite lattice is principal (a nonempty down-set closed
under binary join contains the join of all its members), so ideals are
enumerated as the principal down-sets; the :class:`LatticeIdeal` type still
stores membership flags and validates the down-set and join-closure
conditions so non-principal candidates are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MalformedDoc, NotALattice

__all__ = [
    "FiniteLattice",
    "LatticeIdeal",
    "lattice_from_leq",
    "parse_lattice",
    "serialize_lattice",
    "principal_ideal",
    "all_ideals",
    "is_prime_ideal",
    "prime_ideals",
    "maximal_ideals",
    "quotient_by_ideal",
    "complemented_elements",
    "lattice_center",
]


@dataclass(frozen=True)
class FiniteLattice:
    """A bounded lattice on 0..size-1 described by its order matrix."""

    leq: tuple[tuple[bool, ...], ...]
    _join: tuple = field(compare=False, hash=False, repr=False)
    _meet: tuple = field(compare=False, hash=False, repr=False)
    bottom: int = field(compare=False)
    top: int = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.leq)

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def join(self, a: int, b: int) -> int:
        return self._join[a][b]

    def meet(self, a: int, b: int) -> int:
        return self._meet[a][b]

    def join_many(self, items) -> int:
        out = self.bottom
        for x in items:
            out = self._join[out][x]
        return out

    def meet_many(self, items) -> int:
        out = self.top
        for x in items:
            out = self._meet[out][x]
        return out

    def is_distributive(self) -> bool:
        n = self.size
        return all(
            self._meet[x][self._join[y][z]]
            == self._join[self._meet[x][y]][self._meet[x][z]]
            for x in range(n)
            for y in range(n)
            for z in range(n)
        )

    def atoms(self) -> list[int]:
        return [
            a
            for a in range(self.size)
            if a != self.bottom
            and all(
                x == self.bottom or x == a or not self.leq[x][a]
                for x in range(self.size)
            )
        ]


def lattice_from_leq(leq) -> FiniteLattice:
    """Validate an order matrix and compute join/meet tables.

    Raises :class:`NotALattice` when the matrix is not a bounded lattice
    order (reflexive, antisymmetric, transitive, all joins/meets exist).
    """
    matrix = tuple(tuple(bool(v) for v in row) for row in leq)
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise NotALattice("leq must be a nonempty square matrix")
    for a in range(n):
        if not matrix[a][a]:
            raise NotALattice(f"order not reflexive at {a}")
        for b in range(n):
            if a != b and matrix[a][b] and matrix[b][a]:
                raise NotALattice(f"order not antisymmetric at {a}, {b}")
            for c in range(n):
                if matrix[a][b] and matrix[b][c] and not matrix[a][c]:
                    raise NotALattice(f"order not transitive at {a}, {b}, {c}")
    join_table = [[0] * n for _ in range(n)]
    meet_table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            ups = [c for c in range(n) if matrix[a][c] and matrix[b][c]]
            downs = [c for c in range(n) if matrix[c][a] and matrix[c][b]]
            lub = [c for c in ups if all(matrix[c][d] for d in ups)]
            glb = [c for c in downs if all(matrix[d][c] for d in downs)]
            if len(lub) != 1 or len(glb) != 1:
                raise NotALattice(f"elements {a}, {b} lack a unique lub/glb")
            join_table[a][b] = lub[0]
            meet_table[a][b] = glb[0]
    bottoms = [a for a in range(n) if all(matrix[a][b] for b in range(n))]
    tops = [a for a in range(n) if all(matrix[b][a] for b in range(n))]
    if len(bottoms) != 1 or len(tops) != 1:
        raise NotALattice("order has no unique bottom/top")
    return FiniteLattice(
        leq=matrix,
        _join=tuple(tuple(row) for row in join_table),
        _meet=tuple(tuple(row) for row in meet_table),
        bottom=bottoms[0],
        top=tops[0],
    )


def serialize_lattice(lattice: FiniteLattice) -> dict:
    return {
        "size": lattice.size,
        "leq": [[bool(v) for v in row] for row in lattice.leq],
    }


def parse_lattice(doc: dict) -> FiniteLattice:
    if not isinstance(doc, dict) or set(doc) != {"size", "leq"}:
        raise MalformedDoc(f"bad lattice document: {doc!r}")
    if not isinstance(doc["leq"], list) or len(doc["leq"]) != doc["size"]:
        raise MalformedDoc("lattice leq must be a size x size matrix")
    return lattice_from_leq(doc["leq"])


@dataclass(frozen=True)
class LatticeIdeal:
    """A nonempty down-set closed under finite join, as membership flags."""

    lattice: FiniteLattice
    flags: tuple[bool, ...]

    def __post_init__(self):
        lat = self.lattice
        members = self.members()
        if not members:
            raise NotALattice("an ideal must be nonempty")
        for x in members:
            for y in range(lat.size):
                if lat.le(y, x) and not self.flags[y]:
                    raise NotALattice(f"ideal not a down-set: {y} <= {x}")
        for x in members:
            for y in members:
                if not self.flags[lat.join(x, y)]:
                    raise NotALattice(f"ideal not join-closed at {x}, {y}")

    def members(self) -> list[int]:
        return [x for x, inside in enumerate(self.flags) if inside]

    def __contains__(self, x: int) -> bool:
        return self.flags[x]

    def generator(self) -> int:
        """The largest member; every ideal of a finite lattice is principal."""
        return self.lattice.join_many(self.members())

    def is_proper(self) -> bool:
        return not self.flags[self.lattice.top]


def principal_ideal(lattice: FiniteLattice, x: int) -> LatticeIdeal:
    return LatticeIdeal(
        lattice, tuple(lattice.le(y, x) for y in range(lattice.size))
    )


def all_ideals(lattice: FiniteLattice) -> list[LatticeIdeal]:
    return [principal_ideal(lattice, x) for x in range(lattice.size)]


def is_prime_ideal(ideal: LatticeIdeal) -> bool:
    """Proper, and x ^ y inside forces x or y inside."""
    lat = ideal.lattice
    if not ideal.is_proper():
        return False
    for x in range(lat.size):
        for y in range(lat.size):
            if ideal.flags[lat.meet(x, y)] and not (ideal.flags[x] or ideal.flags[y]):
                return False
    return True


def prime_ideals(lattice: FiniteLattice) -> list[LatticeIdeal]:
    return [ideal for ideal in all_ideals(lattice) if is_prime_ideal(ideal)]


def maximal_ideals(lattice: FiniteLattice) -> list[LatticeIdeal]:
    proper = [ideal for ideal in all_ideals(lattice) if ideal.is_proper()]
    out = []
    for ideal in proper:
        g = ideal.generator()
        if not any(
            other.generator() != g and lattice.le(g, other.generator())
            for other in proper
        ):
            out.append(ideal)
    return out


def quotient_by_ideal(ideal: LatticeIdeal) -> tuple[FiniteLattice, list[int]]:
    """L/I under x ~ y iff x v i = y v i for some i in I.

    This is the congruence generated by collapsing I to the bottom of a
    distributive lattice.  Returns the quotient and the class map.
    """
    lat = ideal.lattice
    members = ideal.members()
    n = lat.size

    def equivalent(x: int, y: int) -> bool:
        return any(lat.join(x, i) == lat.join(y, i) for i in members)

    class_of = [-1] * n
    reps: list[int] = []
    for x in range(n):
        for k, r in enumerate(reps):
            if equivalent(x, r):
                class_of[x] = k
                break
        else:
            class_of[x] = len(reps)
            reps.append(x)
    k = len(reps)
    leq = [[False] * k for _ in range(k)]
    for i, r in enumerate(reps):
        for j, s in enumerate(reps):
            # class order: some members are related
            leq[i][j] = any(
                lat.le(x, y)
                for x in range(n)
                if class_of[x] == i
                for y in range(n)
                if class_of[y] == j
            )
    quotient = lattice_from_leq(leq)
    return quotient, class_of


def complemented_elements(lattice: FiniteLattice) -> dict[int, int]:
    """Map of complemented elements to their complement.

    In a distributive lattice complements are unique; a repeated complement
    would indicate a non-distributive input and raises NotALattice.
    """
    out: dict[int, int] = {}
    for x in range(lattice.size):
        mates = [
            y
            for y in range(lattice.size)
            if lattice.join(x, y) == lattice.top and lattice.meet(x, y) == lattice.bottom
        ]
        if len(mates) > 1:
            raise NotALattice(f"element {x} has several complements: {mates}")
        if mates:
            out[x] = mates[0]
    return out


def lattice_center(lattice: FiniteLattice) -> list[int]:
    """The complemented elements, sorted."""
    return sorted(complemented_elements(lattice))
