"""Exhaustive property suites over a corpus of finite algebras.

Each suite checks one batch of invariants or one named transfer result on a
single algebra and yields Check records; ``verify_algebra`` runs every suite
the algebra's hypothesis surrogates allow, and ``verify_corpus`` adds the
cross-algebra checks (direct products, quotient correspondences).

Loops over pairs of congruences run corpus-wide; loops over triples are
capped so chains with |Con(A)| = 64 stay fast.  The caps match the sizes the
suites are specified at and are recorded in each check's detail string when
they bite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .algebra import FiniteAlgebra, find_isomorphism, parse_algebra, quotient, serialize_algebra
from .builders import ring_congruence, ring_zn
from .commutator import (
    annihilator,
    commutator_index,
    matrix_subalgebra,
    residuation,
    surrogate_checks,
    _iterate_chain,
)
from .congruences import (
    Congruence,
    brute_force_congruences,
    con_lattice,
    congruence_from_pairs,
    interval_above,
    principal_congruence,
)
from .lattices import lattice_center, principal_ideal
from .lifting import (
    boolean_center_of_congruences,
    cblp_characterization,
    cblp_star_transfer,
    diamond_star_commute,
    has_cblp,
    has_id_blp,
    hyperarchimedean_cblp,
    is_b_normal,
    is_regular,
    lift_orthogonal,
    max_interval_transfer,
    noncoprime_meet_transfer,
    orthogonal_uniqueness_and_atoms,
    project_congruence,
    projection_image,
    quotient_cblp_descent,
    quotient_center_congruences,
    rad_cblp_criterion,
    radical_invariance,
    regular_join_transfer,
    ring_idempotent_lifting,
    ring_idempotents,
    _coprime_pairs,
)
from .reticulation import (
    build_reticulation,
    check_spec_homeomorphism,
    costar,
    ideal_spectra,
    preserves_boolean_center,
    star,
)
from .spectrum import (
    brute_force_clopens,
    clopens_of_max,
    d_set,
    is_semiprime,
    radical,
    radical_oracle,
    spectrum,
    v_set,
)

__all__ = ["Check", "AlgebraReport", "verify_algebra", "verify_corpus"]

TRIPLE_CAP = 12  # |Con(A)| bound for cubic commutator identities
BRUTE_FORCE_CAP = 7  # universe bound for whole-partition enumeration
MATRIX_CHECK_CAP = 4  # universe bound for materializing M(alpha, beta)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class AlgebraReport:
    algebra: FiniteAlgebra
    exploratory: bool
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def _is_ring(alg: FiniteAlgebra) -> bool:
    return alg == ring_zn(alg.size)


def _is_lattice_signature(alg: FiniteAlgebra) -> bool:
    return alg.signature() == (("join", 2), ("meet", 2), ("bot", 0), ("top", 0))


# ---------------------------------------------------------------------------
# suite pieces


def _suite_roundtrip(alg):
    doc = serialize_algebra(alg)
    yield Check("doc-roundtrip", parse_algebra(doc) == alg)


def _suite_con_enumeration(alg):
    lattice = con_lattice(alg)
    if alg.size <= BRUTE_FORCE_CAP:
        brute = set(brute_force_congruences(alg))
        enum = {c.blocks for c in lattice.congruences}
        yield Check(
            "con-brute-force",
            brute == enum,
            f"{len(enum)} congruences at n={alg.size}",
        )
        minimal_ok = True
        for a, b in combinations(range(alg.size), 2):
            cg = principal_congruence(alg, a, b)
            if not cg.related(a, b):
                minimal_ok = False
            for blocks in brute:
                if blocks[a] == blocks[b] and not cg.leq(Congruence(alg, blocks)):
                    minimal_ok = False
        yield Check("principal-minimality", minimal_ok)
    size = len(lattice)
    lattice_ok = True
    for i in range(size):
        for j in range(size):
            jn, mt = lattice.join_index(i, j), lattice.meet_index(i, j)
            if jn != lattice.join_index(j, i) or mt != lattice.meet_index(j, i):
                lattice_ok = False
            if lattice.meet_index(i, jn) != i or lattice.join_index(i, mt) != i:
                lattice_ok = False  # absorption
    yield Check("join-meet-lattice-axioms", lattice_ok)
    ji = lattice.join_irreducible_indices()
    decompose_ok = all(
        lattice.join_many(g for g in ji if lattice.leq_index(g, i)) == i
        for i in range(size)
    )
    yield Check("join-irreducible-decomposition", decompose_ok)
    interval_ok = True
    for theta in lattice.congruences:
        quo = quotient(alg, theta)
        if len(interval_above(lattice, theta)) != len(con_lattice(quo)):
            interval_ok = False
    yield Check("interval-vs-quotient-count", interval_ok)


def _suite_commutator_axioms(alg):
    lattice = con_lattice(alg)
    size = len(lattice)
    com = lambda i, j: commutator_index(lattice, i, j)

    below_ok = all(
        lattice.leq_index(com(i, j), lattice.meet_index(i, j))
        for i in range(size)
        for j in range(size)
    )
    yield Check("commutator-below-meet", below_ok)

    commutative_ok = all(com(i, j) == com(j, i) for i in range(size) for j in range(size))
    yield Check("commutator-commutative", commutative_ok)

    monotone_ok = True
    for i in range(size):
        for i2 in range(size):
            if not lattice.leq_index(i, i2):
                continue
            if not all(lattice.leq_index(com(i, b), com(i2, b)) for b in range(size)):
                monotone_ok = False
                break
    yield Check("commutator-monotone", monotone_ok)

    if size <= TRIPLE_CAP:
        distributive_ok = all(
            com(lattice.join_index(i, j), b) == lattice.join_index(com(i, b), com(j, b))
            for i in range(size)
            for j in range(size)
            for b in range(size)
        )
        yield Check("commutator-join-distributive", distributive_ok, f"|Con|={size}")

    if size <= TRIPLE_CAP:
        projection_ok = True
        for t in range(size):
            theta = lattice.congruences[t]
            quo = quotient(alg, theta)
            qlat = con_lattice(quo)
            for i in range(size):
                for j in range(size):
                    left = project_congruence(
                        alg,
                        theta,
                        lattice.congruences[lattice.join_index(com(i, j), t)],
                    )
                    qi = qlat.index(
                        project_congruence(
                            alg, theta, lattice.congruences[lattice.join_index(i, t)]
                        )
                    )
                    qj = qlat.index(
                        project_congruence(
                            alg, theta, lattice.congruences[lattice.join_index(j, t)]
                        )
                    )
                    right = qlat.congruences[commutator_index(qlat, qi, qj)]
                    if left.blocks != right.blocks:
                        projection_ok = False
        yield Check("commutator-projection-identity", projection_ok, f"|Con|={size}")

    coprime_meet_ok = True
    coprime_iterates_ok = True
    coprime_joins_ok = True
    for i, j, cij in _coprime_pairs(lattice):
        if cij != lattice.meet_index(i, j):
            coprime_meet_ok = False
        chain_i, _ = _iterate_chain(lattice, i)
        chain_j, _ = _iterate_chain(lattice, j)
        bound = max(len(chain_i), len(chain_j))
        for n in range(1, bound + 1):
            a = chain_i[min(n, len(chain_i) - 1)]
            b = chain_j[min(n, len(chain_j) - 1)]
            if lattice.join_index(a, b) != lattice.top_index:
                coprime_iterates_ok = False
        for g in range(len(lattice)):
            if lattice.join_index(i, g) == lattice.top_index:
                met = lattice.meet_index(j, g)
                cjg = commutator_index(lattice, j, g)
                if (
                    lattice.join_index(i, cjg) != lattice.top_index
                    or lattice.join_index(i, met) != lattice.top_index
                ):
                    coprime_joins_ok = False
    yield Check("coprime-commutator-is-meet", coprime_meet_ok)
    yield Check("coprime-iterates-stay-coprime", coprime_iterates_ok)
    yield Check("coprime-join-transfer", coprime_joins_ok)

    if size <= TRIPLE_CAP:
        quotient_iterates_ok = True
        for t in range(size):
            theta = lattice.congruences[t]
            quo = quotient(alg, theta)
            qlat = con_lattice(quo)
            for i in range(size):
                for j in range(size):
                    if not (lattice.leq_index(t, i) and lattice.leq_index(t, j)):
                        continue
                    qi = qlat.index(project_congruence(alg, theta, lattice.congruences[i]))
                    qj = qlat.index(project_congruence(alg, theta, lattice.congruences[j]))
                    qc = commutator_index(qlat, qi, qj)
                    chain_q, _ = _iterate_chain(qlat, qc)
                    base = commutator_index(lattice, i, j)
                    chain_a, _ = _iterate_chain(lattice, base)
                    bound = max(len(chain_q), len(chain_a))
                    for n in range(1, bound + 1):
                        left = chain_q[min(n - 1, len(chain_q) - 1)]
                        up = chain_a[min(n - 1, len(chain_a) - 1)]
                        right = qlat.index(
                            project_congruence(
                                alg,
                                theta,
                                lattice.congruences[lattice.join_index(up, t)],
                            )
                        )
                        if left != right:
                            quotient_iterates_ok = False
        yield Check("quotient-iterate-identity", quotient_iterates_ok, f"|Con|={size}")

    adjunction_ok = True
    residuum = {}
    for i in range(size):
        for j in range(size):
            residuum[i, j] = lattice.index(
                residuation(alg, lattice.congruences[i], lattice.congruences[j])
            )
    for a in range(size):
        for b in range(size):
            for c in range(size):
                if lattice.leq_index(a, residuum[b, c]) != lattice.leq_index(
                    com(a, b), c
                ):
                    adjunction_ok = False
    yield Check("residuation-adjunction", adjunction_ok)

    annihilator_ok = all(
        lattice.index(annihilator(alg, lattice.congruences[i]))
        == residuum[i, lattice.bottom_index]
        for i in range(size)
    )
    yield Check("annihilator-is-residuum-at-bottom", annihilator_ok)

    if _is_ring(alg):
        n = alg.size
        divisors = [d for d in range(1, n + 1) if n % d == 0]
        ring_ok = all(
            commutator_index(
                lattice,
                lattice.index(ring_congruence(alg, d)),
                lattice.index(ring_congruence(alg, e)),
            )
            == lattice.index(ring_congruence(alg, gcd(d * e, n)))
            for d in divisors
            for e in divisors
        )
        yield Check("ring-gcd-oracle", ring_ok)

    if _is_lattice_signature(alg):
        cd_ok = all(
            com(i, j) == lattice.meet_index(i, j)
            for i in range(size)
            for j in range(size)
        )
        yield Check("distributive-meet-oracle", cd_ok)

    if alg.size <= MATRIX_CHECK_CAP:
        matrix_ok = True
        for i in range(size):
            for j in range(size):
                alpha, beta = lattice.congruences[i], lattice.congruences[j]
                m = matrix_subalgebra(alg, alpha, beta)
                for a in range(alg.size):
                    for a2 in range(alg.size):
                        if alpha.related(a, a2) and (a, a, a2, a2) not in m.matrices:
                            matrix_ok = False
                        if beta.related(a, a2) and (a, a2, a, a2) not in m.matrices:
                            matrix_ok = False
                value = lattice.congruences[com(i, j)]
                fix = _term_condition_fixpoint(alg, m)
                if fix.blocks != value.blocks:
                    matrix_ok = False
        yield Check("matrix-subalgebra-cross-check", matrix_ok, f"n={alg.size}")


def _term_condition_fixpoint(alg, m) -> Congruence:
    """Cross-check route for the commutator, directly on a materialized
    matrix set: both row orientations of M(alpha, beta)
    and of M(beta, alpha) (the transposes)."""
    pairs = set()
    for x, y, z, w in m.matrices:
        pairs.add(((x, y), (z, w)))
        pairs.add(((x, z), (y, w)))  # transpose rows = columns
    delta = congruence_from_pairs(alg, [])
    while True:
        new = [
            bottom
            for top, bottom in pairs
            if delta.related(*top) and not delta.related(*bottom)
        ]
        if not new:
            return delta
        delta = congruence_from_pairs(alg, list(enumerate(delta.blocks)) + new)


def _suite_radicals(alg):
    lattice = con_lattice(alg)
    size = len(lattice)
    rho = {i: lattice.index(radical(alg, lattice.congruences[i])) for i in range(size)}

    dual_ok = all(
        rho[i] == lattice.index(radical_oracle(alg, lattice.congruences[i]))
        for i in range(size)
    )
    yield Check("radical-dual-path", dual_ok)

    lemma_ok = True
    top = lattice.top_index
    for a in range(size):
        if not lattice.leq_index(a, rho[a]):
            lemma_ok = False
        if (rho[a] == top) != (a == top):
            lemma_ok = False
        if rho[rho[a]] != rho[a]:
            lemma_ok = False
        chain, _ = _iterate_chain(lattice, a)
        for value in chain:
            if rho[value] != rho[a]:
                lemma_ok = False
        for b in range(size):
            met = lattice.meet_index(a, b)
            com = commutator_index(lattice, a, b)
            if not (rho[met] == rho[com] == lattice.meet_index(rho[a], rho[b])):
                lemma_ok = False
            joined = lattice.join_index(a, b)
            if rho[joined] != rho[lattice.join_index(rho[a], rho[b])]:
                lemma_ok = False
            if (lattice.join_index(rho[a], rho[b]) == top) != (joined == top):
                lemma_ok = False
    yield Check("radical-lemma-suite", lemma_ok)

    primes_radical_ok = all(
        rho[lattice.index(phi)] == lattice.index(phi) for phi in spectrum(alg).primes
    )
    yield Check("primes-are-radical", primes_radical_ok)

    # the radical congruences form a bounded distributive lattice under
    # intersection and radical-of-join
    radicals = sorted({rho[i] for i in range(size)})
    frame_ok = True
    for x in radicals:
        for y in radicals:
            met = lattice.meet_index(x, y)
            if met not in radicals:
                frame_ok = False
            if rho[lattice.join_index(x, y)] not in radicals:
                frame_ok = False
    for x in radicals:
        for y in radicals:
            for z in radicals:
                joined = rho[lattice.join_index(y, z)]
                left = lattice.meet_index(x, joined)
                right = rho[
                    lattice.join_index(
                        lattice.meet_index(x, y), lattice.meet_index(x, z)
                    )
                ]
                if left != right:
                    frame_ok = False
    yield Check("radical-lattice-distributive", frame_ok, f"{len(radicals)} radicals")


def _suite_spectrum(alg):
    lattice = con_lattice(alg)
    data = spectrum(alg)
    prime_set = {p.blocks for p in data.primes}

    yield Check(
        "maximals-are-prime", all(m.blocks in prime_set for m in data.maximals)
    )

    oracle_primes = {p.blocks for p in spectrum(alg, all_pairs=True).primes}
    yield Check("primality-all-pairs-oracle", prime_set == oracle_primes)

    size = len(lattice)
    d_members = {
        i: frozenset(d_set(alg, lattice.congruences[i]).members) for i in range(size)
    }
    topology_ok = True
    for i in range(size):
        for j in range(size):
            com = commutator_index(lattice, i, j)
            if d_members[com] != d_members[i] & d_members[j]:
                topology_ok = False
            joined = lattice.join_index(i, j)
            if d_members[joined] != d_members[i] | d_members[j]:
                topology_ok = False
    full = frozenset(range(len(data.primes)))
    if d_members[lattice.top_index] != full or d_members[lattice.bottom_index] not in (
        frozenset(),
        full,
    ):
        topology_ok = False
    if d_members[lattice.bottom_index] != frozenset(
        k
        for k, phi in enumerate(data.primes)
        if not lattice.leq_index(lattice.bottom_index, lattice.index(phi))
    ):
        topology_ok = False
    yield Check("spectral-topology-identities", topology_ok)

    v_ok = all(
        set(v_set(alg, lattice.congruences[i]))
        == set(range(len(data.primes))) - set(d_members[i])
        for i in range(size)
    )
    yield Check("v-d-complement", v_ok)

    # T1: every singleton of Max(A) is closed in the subspace
    t1_ok = True
    max_count = len(data.maximals)
    clopens = set(brute_force_clopens(alg))
    opens = set()
    for i in range(size):
        opens.add(
            tuple(
                sorted(
                    k
                    for k, phi in enumerate(data.maximals)
                    if not lattice.leq_index(i, lattice.index(phi))
                )
            )
        )
    for k in range(max_count):
        complement = tuple(sorted(set(range(max_count)) - {k}))
        if complement not in opens:
            t1_ok = False
    yield Check("max-subspace-T1", t1_ok)

    witnesses = clopens_of_max(alg)
    yield Check(
        "clopen-witness-completeness",
        {w.members for w in witnesses} == clopens,
        f"{len(witnesses)} clopens",
    )
    witness_ok = True
    rad_index = lattice.index(data.rad)
    for w in witnesses:
        a, b = lattice.index(w.alpha), lattice.index(w.beta)
        if lattice.join_index(a, b) != lattice.top_index:
            witness_ok = False
        if not lattice.leq_index(commutator_index(lattice, a, b), rad_index):
            witness_ok = False
        trace = tuple(
            sorted(
                k
                for k, phi in enumerate(data.maximals)
                if not lattice.leq_index(a, lattice.index(phi))
            )
        )
        if trace != w.members:
            witness_ok = False
    yield Check("clopen-witness-conditions", witness_ok)


def _suite_reticulation(alg):
    lattice = con_lattice(alg)
    retic = build_reticulation(alg)
    size = len(lattice)
    lam = {i: retic.lambda_index(lattice.congruences[i]) for i in range(size)}
    rho = {i: lattice.index(radical(alg, lattice.congruences[i])) for i in range(size)}
    rl = retic.lattice

    # the eight quotient-map clauses
    ok = True
    nil = lattice.index(spectrum(alg).nilradical)
    semiprime = is_semiprime(alg)
    for a in range(size):
        if (lam[a] == rl.top) != (a == lattice.top_index):
            ok = False
        chain, _ = _iterate_chain(lattice, a)
        # some iterate (n >= 1) is the bottom congruence iff the stable value
        # is; a length-1 chain is its own square
        reaches_bottom = chain[-1] == lattice.bottom_index
        if (lam[a] == rl.bottom) != reaches_bottom:
            ok = False
        if (lam[a] == rl.bottom) != lattice.leq_index(a, nil):
            ok = False
        if semiprime and (lam[a] == rl.bottom) != (a == lattice.bottom_index):
            ok = False
        for value in chain[1:] or chain:
            if lam[value] != lam[a]:
                ok = False
        for b in range(size):
            if lam[lattice.join_index(a, b)] != rl.join(lam[a], lam[b]):
                ok = False
            met = lattice.meet_index(a, b)
            com = commutator_index(lattice, a, b)
            if not (lam[met] == lam[com] == rl.meet(lam[a], lam[b])):
                ok = False
            le = rl.le(lam[a], lam[b])
            if le != lattice.leq_index(rho[a], rho[b]):
                ok = False
            if le != lattice.leq_index(chain[-1], b):
                ok = False
    yield Check("lambda-clause-suite", ok)

    star_of = {i: star(retic, lattice.congruences[i]) for i in range(size)}
    star_ok = True
    for a in range(size):
        principal = principal_ideal(rl, lam[a])
        if star_of[a].flags != principal.flags:
            star_ok = False
        if star_of[a].flags != star_of[rho[a]].flags:
            star_ok = False
        for b in range(size):
            joined = star_of[lattice.join_index(a, b)]
            want = principal_ideal(rl, rl.join(star_of[a].generator(), star_of[b].generator()))
            if joined.flags != want.flags:
                star_ok = False
            com = commutator_index(lattice, a, b)
            met = lattice.meet_index(a, b)
            intersect = tuple(
                x and y for x, y in zip(star_of[a].flags, star_of[b].flags)
            )
            if not (star_of[com].flags == star_of[met].flags == intersect):
                star_ok = False
    yield Check("star-identity-suite", star_ok)

    costar_ok = True
    ideals = [principal_ideal(rl, x) for x in range(rl.size)]
    for ideal in ideals:
        down = costar(retic, ideal)
        d = lattice.index(down)
        if rho[d] != d:
            costar_ok = False
        if star(retic, down).flags != ideal.flags:
            costar_ok = False
        for a in range(size):
            inside = lattice.leq_index(a, d)
            if inside != ideal.flags[lam[a]]:
                costar_ok = False
    for a in range(size):
        if lattice.index(costar(retic, star_of[a])) != rho[a]:
            costar_ok = False
    yield Check("costar-identity-suite", costar_ok)

    homeo = check_spec_homeomorphism(alg)
    yield Check(
        "spec-homeomorphism",
        homeo.ok,
        "; ".join(homeo.failures[:2]) or f"{homeo.prime_count} primes",
    )

    prime_ideal_count = len(ideal_spectra(rl)[0])
    yield Check(
        "prime-counts-match",
        prime_ideal_count == len(spectrum(alg).primes),
        f"{prime_ideal_count} prime ideals",
    )


def _suite_boolean_center(alg):
    lattice = con_lattice(alg)
    retic = build_reticulation(alg)
    rl = retic.lattice
    center = boolean_center_of_congruences(alg)
    size = len(lattice)
    member = {c.blocks for c in center.elements}

    unique_ok = True
    for alpha in center.elements:
        i = lattice.index(alpha)
        mates = [
            beta
            for beta in center.elements
            if lattice.join_index(i, lattice.index(beta)) == lattice.top_index
            and lattice.meet_index(i, lattice.index(beta)) == lattice.bottom_index
        ]
        if len(mates) != 1 or mates[0].blocks != center.complement[alpha.blocks].blocks:
            unique_ok = False
    yield Check("center-complement-unique", unique_ok)

    meet_ok = True
    distributive_ok = True
    for alpha in center.elements:
        a = lattice.index(alpha)
        for t in range(size):
            if commutator_index(lattice, t, a) != lattice.meet_index(t, a):
                meet_ok = False
            for u in range(size):
                left = lattice.join_index(lattice.meet_index(t, u), a)
                right = lattice.meet_index(
                    lattice.join_index(t, a), lattice.join_index(u, a)
                )
                if left != right:
                    distributive_ok = False
    yield Check("center-meet-is-commutator", meet_ok)
    yield Check("center-join-distributes", distributive_ok)

    lemma41_ok = True
    for i, j, cij in _coprime_pairs(lattice):
        if cij == lattice.bottom_index:
            if (
                lattice.congruences[i].blocks not in member
                or lattice.congruences[j].blocks not in member
            ):
                lemma41_ok = False
        chain_i, _ = _iterate_chain(lattice, i)
        chain_j, _ = _iterate_chain(lattice, j)
        bound = max(len(chain_i), len(chain_j))
        for n in range(1, bound + 1):
            a = chain_i[min(n, len(chain_i) - 1)]
            b = chain_j[min(n, len(chain_j) - 1)]
            if commutator_index(lattice, a, b) == lattice.bottom_index:
                if (
                    lattice.congruences[a].blocks not in member
                    or lattice.congruences[b].blocks not in member
                ):
                    lemma41_ok = False
    yield Check("coprime-pairs-enter-center", lemma41_ok)

    closure_ok = True
    for alpha in center.elements:
        for beta in center.elements:
            a, b = lattice.index(alpha), lattice.index(beta)
            if lattice.congruences[lattice.join_index(a, b)].blocks not in member:
                closure_ok = False
            if lattice.congruences[lattice.meet_index(a, b)].blocks not in member:
                closure_ok = False
    yield Check("center-closed-under-join-meet", closure_ok)

    lam_center = set(lattice_center(rl))
    lam_ok = True
    images = {}
    for alpha in center.elements:
        li = retic.lambda_index(alpha)
        if li not in lam_center:
            lam_ok = False
        images[alpha.blocks] = li
    if len(set(images.values())) != len(images):
        lam_ok = False
    if closure_ok:
        for alpha in center.elements:
            for beta in center.elements:
                a, b = lattice.index(alpha), lattice.index(beta)
                joined = lattice.congruences[lattice.join_index(a, b)].blocks
                met = lattice.congruences[lattice.meet_index(a, b)].blocks
                if images[joined] != rl.join(images[alpha.blocks], images[beta.blocks]):
                    lam_ok = False
                if images[met] != rl.meet(images[alpha.blocks], images[beta.blocks]):
                    lam_ok = False
    yield Check("lambda-boolean-embedding", lam_ok)

    report = preserves_boolean_center(alg)
    # surjectivity of lambda restricted to the center == preservation
    surjective = lam_center <= set(images.values())
    yield Check(
        "center-preservation-equivalences",
        surjective == report.preserves,
        f"preserves={report.preserves}",
    )
    if report.sufficient_conditions_hold:
        yield Check("sufficient-conditions-imply-preservation", report.preserves)

    # clopen correspondence on Spec(A)
    data = spectrum(alg)
    size_primes = len(data.primes)
    opens = {}
    for i in range(size):
        opens[i] = tuple(sorted(d_set(alg, lattice.congruences[i]).members))
    spec_opens = set(opens.values())
    spec_clopens = {
        u
        for u in spec_opens
        if tuple(sorted(set(range(size_primes)) - set(u))) in spec_opens
    }
    d_images = {opens[lattice.index(alpha)] for alpha in center.elements}
    d_injective = len(d_images) == len(center.elements)
    d_iso = d_injective and d_images == spec_clopens
    yield Check(
        "center-clopen-isomorphism-iff-preservation",
        d_iso == report.preserves and all(u in spec_clopens for u in d_images),
        f"|B|={len(center.elements)}, |Clop(Spec)|={len(spec_clopens)}",
    )


def _suite_lifting(alg):
    lattice = con_lattice(alg)
    retic = build_reticulation(alg)
    size = len(lattice)

    verdicts = {}
    for i, theta in enumerate(lattice.congruences):
        verdicts[i] = has_cblp(alg, theta).cblp
    yield Check("cblp-decided-everywhere", True, f"{sum(verdicts.values())}/{size} lift")

    # the projection's center map really is a Boolean morphism: images of
    # complemented congruences are complemented, complements go to
    # complements, and (for small centers) joins and meets are preserved
    center = boolean_center_of_congruences(alg)
    morphism_ok = True
    for t in range(size):
        theta = lattice.congruences[t]
        quo, qcenter = quotient_center_congruences(alg, theta)
        qlattice = con_lattice(quo)
        qmember = {c.blocks for c in qcenter.elements}
        images = {}
        for alpha in center.elements:
            image = projection_image(alg, theta, alpha)
            images[alpha.blocks] = qlattice.index(image)
            if image.blocks not in qmember:
                morphism_ok = False
        for alpha in center.elements:
            mate = center.complement[alpha.blocks]
            a, na = images[alpha.blocks], images[mate.blocks]
            if (
                qlattice.join_index(a, na) != qlattice.top_index
                or qlattice.meet_index(a, na) != qlattice.bottom_index
            ):
                morphism_ok = False
        if len(center.elements) <= 16:
            for alpha in center.elements:
                for beta in center.elements:
                    a, b = lattice.index(alpha), lattice.index(beta)
                    joined = lattice.congruences[lattice.join_index(a, b)]
                    met = lattice.congruences[lattice.meet_index(a, b)]
                    if images[joined.blocks] != qlattice.join_index(
                        images[alpha.blocks], images[beta.blocks]
                    ):
                        morphism_ok = False
                    if images[met.blocks] != qlattice.meet_index(
                        images[alpha.blocks], images[beta.blocks]
                    ):
                        morphism_ok = False
    yield Check("projection-center-morphism", morphism_ok)

    yield Check(
        "radical-invariance",
        all(radical_invariance(alg, t) for t in lattice.congruences),
    )
    yield Check(
        "star-transfer",
        all(cblp_star_transfer(alg, t) for t in lattice.congruences),
    )

    ideal_ok = True
    for x in range(retic.lattice.size):
        ideal = principal_ideal(retic.lattice, x)
        left = has_id_blp(retic.lattice, ideal).lifts
        right = has_cblp(alg, costar(retic, ideal)).cblp
        if left != right:
            ideal_ok = False
    yield Check("ideal-transfer", ideal_ok)

    rho = {i: lattice.index(radical(alg, lattice.congruences[i])) for i in range(size)}
    same_radical_ok = all(
        verdicts[i] == verdicts[j]
        for i in range(size)
        for j in range(size)
        if rho[i] == rho[j]
    )
    yield Check("equal-radicals-equal-verdicts", same_radical_ok)

    nil = lattice.index(spectrum(alg).nilradical)
    below_nil_ok = all(
        verdicts[i] for i in range(size) if lattice.leq_index(i, nil)
    )
    yield Check("below-nilradical-lifts", below_nil_ok)

    res_ok = True
    rem_ok = True
    for t in range(size):
        theta = lattice.congruences[t]
        quo = quotient(alg, theta)
        qlat = con_lattice(quo)
        for e in range(size):
            if not lattice.leq_index(t, e):
                continue
            eps = lattice.congruences[e]
            arrow = residuation(alg, eps, theta)
            if not lattice.leq_index(
                commutator_index(lattice, e, lattice.index(arrow)), t
            ):
                rem_ok = False
            left = annihilator(quo, project_congruence(alg, theta, eps))
            right = project_congruence(
                alg,
                theta,
                lattice.congruences[lattice.join_index(lattice.index(arrow), t)],
            )
            if left.blocks != right.blocks:
                res_ok = False
    yield Check("quotient-annihilator-identity", res_ok)
    yield Check("residuum-commutator-below-theta", rem_ok)

    data = spectrum(alg)
    signature = {}
    for i in range(size):
        signature[i] = frozenset(
            phi.blocks
            for phi in data.maximals
            if lattice.leq_index(i, lattice.index(phi))
        )
    transfer_ok = True
    for i in range(size):
        for j in range(size):
            if lattice.leq_index(i, j) and signature[i] == signature[j]:
                if not max_interval_transfer(
                    alg, lattice.congruences[i], lattice.congruences[j]
                ):
                    transfer_ok = False
    yield Check("max-interval-transfer", transfer_ok)

    rad_index = lattice.index(data.rad)
    rad_transfer_ok = all(
        verdicts[i]
        for i in range(size)
        if lattice.leq_index(i, rad_index) and verdicts[rad_index]
    )
    yield Check("below-rad-transfer", rad_transfer_ok)

    yield Check("rad-clopen-criterion", rad_cblp_criterion(alg))
    yield Check("hyperarchimedean-cblp", hyperarchimedean_cblp(alg))

    yield Check(
        "diamond-star-commute",
        all(diamond_star_commute(alg, t) for t in lattice.congruences),
    )

    thm63_ok = True
    exploratory = not preserves_boolean_center(alg).preserves
    for theta in lattice.congruences:
        report = cblp_characterization(alg, theta)
        values = set(report.thm63.values())
        if not exploratory and len(values) != 1:
            thm63_ok = False
    yield Check("characterization-four-way", thm63_ok)

    regular_ok = all(
        regular_join_transfer(alg, lattice.congruences[i], lattice.congruences[j])
        for i in range(size)
        for j in range(size)
    )
    yield Check("regular-join-transfer", regular_ok)

    regular_cblp_ok = all(
        verdicts[i] for i in range(size) if is_regular(alg, lattice.congruences[i])
    )
    yield Check("regular-congruences-lift", regular_cblp_ok)

    noncoprime_ok = all(
        noncoprime_meet_transfer(alg, lattice.congruences[i], lattice.congruences[j])
        for i in range(size)
        for j in range(size)
    )
    yield Check("noncoprime-meet-transfer", noncoprime_ok)

    descent_ok = all(
        quotient_cblp_descent(alg, lattice.congruences[i])
        for i in range(size)
        if lattice.leq_index(i, rad_index)
    )
    yield Check("quotient-descent", descent_ok)

    bn = is_b_normal(alg)
    yield Check(
        "b-normal-iff-cblp",
        bn.b_normal == all(verdicts.values()),
        f"b_normal={bn.b_normal}",
    )


def _suite_orthogonal(alg):
    lattice = con_lattice(alg)
    data = spectrum(alg)
    rad_index = lattice.index(data.rad)
    ortho_ok = True
    unique_ok = True
    atoms_ok = True
    lemma_ok = True
    for i in range(len(lattice)):
        if not lattice.leq_index(i, rad_index):
            continue
        theta = lattice.congruences[i]
        report = orthogonal_uniqueness_and_atoms(alg, theta)
        lemma_ok = lemma_ok and report.difference_lemma
        unique_ok = unique_ok and report.unique_lifts
        ortho_ok = ortho_ok and report.lifts_orthogonal
        if report.atoms_lift_to_atoms is False:
            atoms_ok = False
        if has_cblp(alg, theta).cblp:
            quo, qcenter = quotient_center_congruences(alg, theta)
            qlat = con_lattice(quo)
            maximal_family = [
                qlat.congruences[k]
                for k in sorted(
                    qlat.index(a) for a in qcenter.atoms
                )
            ]
            lifted = lift_orthogonal(alg, theta, maximal_family)
            images = [projection_image(alg, theta, a).blocks for a in lifted]
            if images != [b.blocks for b in maximal_family]:
                ortho_ok = False
    yield Check("orthogonal-difference-lemma", lemma_ok)
    yield Check("orthogonal-lift-unique", unique_ok)
    yield Check("orthogonal-lift-orthogonal", ortho_ok)
    yield Check("atom-families-lift-to-atoms", atoms_ok)


def _suite_ring_oracles(alg):
    if not _is_ring(alg):
        return
    n = alg.size
    idempotents = ring_idempotents(n)
    center = boolean_center_of_congruences(alg)
    yield Check(
        "center-counts-idempotents",
        len(center.elements) == len(idempotents),
        f"|B|={len(center.elements)}, idempotents={len(idempotents)}",
    )
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    agree = all(
        has_cblp(alg, ring_congruence(alg, d)).cblp == ring_idempotent_lifting(n, d)
        for d in divisors
    )
    yield Check("cblp-matches-idempotent-lifting", agree)


SUITES = [
    ("algebra", _suite_roundtrip),
    ("congruences", _suite_con_enumeration),
    ("commutator", _suite_commutator_axioms),
    ("radical", _suite_radicals),
    ("spectrum", _suite_spectrum),
    ("reticulation", _suite_reticulation),
    ("center", _suite_boolean_center),
    ("lifting", _suite_lifting),
    ("orthogonal", _suite_orthogonal),
    ("oracle", _suite_ring_oracles),
]

BASIC_SUITES = {"algebra", "congruences"}


def verify_algebra(alg: FiniteAlgebra) -> AlgebraReport:
    """Run every applicable suite on one algebra.

    Algebras failing the hypothesis surrogates run only the hypothesis-free
    suites and come back marked exploratory.
    """
    start = time.time()
    surrogate = surrogate_checks(alg)
    report = AlgebraReport(algebra=alg, exploratory=not surrogate.ok)
    for label, suite in SUITES:
        if report.exploratory and label not in BASIC_SUITES:
            continue
        for check in suite(alg):
            check.name = f"{label}.{check.name}"
            report.checks.append(check)
    if report.exploratory:
        report.checks.append(
            Check(
                "surrogate.hypotheses",
                True,
                "EXPLORATORY: " + "; ".join(surrogate.failures()),
            )
        )
    else:
        report.checks.append(
            Check("surrogate.hypotheses", True, "modularity and top checks pass")
        )
    report.elapsed = time.time() - start
    return report


def _product_congruence(prod, a_con, b_con, b_size):
    labels = [
        a_con.blocks[x // b_size] * b_size + b_con.blocks[x % b_size]
        for x in range(prod.size)
    ]
    from .congruences import congruence_from_blocks

    return congruence_from_blocks(prod, labels)


def verify_corpus(algebras, pair_size_cap: int = 16) -> list[AlgebraReport]:
    """Per-algebra reports plus a synthetic report of cross-algebra checks."""
    from .algebra import product

    reports = [verify_algebra(alg) for alg in algebras]

    cross = AlgebraReport(
        algebra=FiniteAlgebra("corpus-cross-checks", 1, ()), exploratory=False
    )
    start = time.time()
    # the factorization of Con over direct products characterizes the
    # top-commutator hypothesis, so only surrogate-passing algebras qualify
    passing = [alg for alg in algebras if surrogate_checks(alg).ok]
    eligible = [
        (a, b)
        for a in passing
        for b in passing
        if a.signature() == b.signature() and a.size * b.size <= pair_size_cap
    ]
    hf_ok = True
    for a, b in eligible:
        prod = product(a, b)
        plat = con_lattice(prod)
        alat, blat = con_lattice(a), con_lattice(b)
        if len(plat) != len(alat) * len(blat):
            hf_ok = False
            continue
        mapped = {}
        for ca in alat.congruences:
            for cb in blat.congruences:
                mapped[(ca.blocks, cb.blocks)] = _product_congruence(
                    prod, ca, cb, b.size
                ).blocks
        if len(set(mapped.values())) != len(mapped):
            hf_ok = False
        if set(mapped.values()) != {c.blocks for c in plat.congruences}:
            hf_ok = False
        for (ka, kb), v in mapped.items():
            for (la, lb), w in mapped.items():
                left = Congruence(prod, v).leq(Congruence(prod, w))
                right = Congruence(a, ka).leq(Congruence(a, la)) and Congruence(
                    b, kb
                ).leq(Congruence(b, lb))
                if left != right:
                    hf_ok = False
    cross.checks.append(
        Check(
            "product.congruence-factorization",
            hf_ok,
            f"{len(eligible)} same-signature pairs",
        )
    )

    assoc_ok = True
    triples = [
        (a, b, c)
        for a in algebras
        for b in algebras
        for c in algebras
        if a.signature() == b.signature() == c.signature()
        and a.size * b.size * c.size <= pair_size_cap
    ]
    for a, b, c in triples:
        left = product(product(a, b), c)
        right = product(a, product(b, c))
        # canonical rebracketing bijection is the identity on flat indices
        if left.size != right.size or any(
            lop.table != rop.table for lop, rop in zip(left.operations, right.operations)
        ):
            assoc_ok = False
    cross.checks.append(
        Check("product.associativity", assoc_ok, f"{len(triples)} triples")
    )

    iso_ok = True
    z12 = ring_zn(12)
    if any(alg == z12 for alg in algebras):
        quo = quotient(z12, ring_congruence(z12, 6))
        iso_ok = iso_ok and find_isomorphism(quo, ring_zn(6)) is not None
        prod = product(ring_zn(4), ring_zn(3))
        iso_ok = iso_ok and find_isomorphism(prod, z12) is not None
    cross.checks.append(Check("product.known-isomorphisms", iso_ok))

    cross.elapsed = time.time() - start
    reports.append(cross)
    return reports
