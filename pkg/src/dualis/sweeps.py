"""Exhaustive sweeps over all small labeled meet-semilattices with top.

Posets are generated one element at a time: element ``k`` is attached below an
up-set and above a down-set of the poset on ``0..k-1``, which produces every
labeled poset exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from . import bits
from .config import SWEEP_CAP, carrier_cap
from .errors import CarrierTooLarge, NotASemilattice
from .order import FinitePoset, down_sets, is_order_ideal, up_sets
from .report import Report
from .semilattice import (MeetSemilattice, distributive_envelope, filter_envelope_failures,
                          sigma_condition_failures, sup_homomorphism_failure)


def _extend(P: FinitePoset) -> Iterator[FinitePoset]:
    k = P.size
    for D in down_sets(P):
        for U in up_sets(P):
            if D & U:
                continue
            # transitivity through the new element: everything in D sits below everything in U
            if any(not bits.is_subset(U, P.up[d]) for d in bits.iter_bits(D)):
                continue
            up = [P.up[x] | (1 << k if D >> x & 1 else 0) for x in range(k)]
            up.append(U | 1 << k)
            yield FinitePoset(k + 1, tuple(up))


def labeled_posets(n: int) -> Iterator[FinitePoset]:
    """Every partial order on ``{0, …, n-1}``."""
    level = [FinitePoset(0, ())]
    for _ in range(n):
        level = [Q for P in level for Q in _extend(P)]
    yield from level


def meet_semilattices(max_size: int = SWEEP_CAP, min_size: int = 1) -> Iterator[MeetSemilattice]:
    """Labeled meet-semilattices with top on 1..max_size elements, by size then generation order."""
    cap = carrier_cap(SWEEP_CAP)
    if max_size > cap:
        raise CarrierTooLarge(max_size, cap, "exhaustive sweep")
    for n in range(min_size, max_size + 1):
        for P in labeled_posets(n):
            try:
                yield MeetSemilattice.from_poset(P)
            except NotASemilattice:
                continue


@dataclass
class Sweep:
    report: Report
    semilattices: int
    distributive: int


def _shape(M: MeetSemilattice) -> list[list[int]]:
    return [list(bits.iter_bits(M.poset.up[a])) for a in range(M.size)]


def characterization_sweep(max_size: int = SWEEP_CAP) -> Sweep:
    """Distributivity characterizations and the prime-complement descriptions of Irr and Op."""
    rep = Report(f"meet-semilattices with top on at most {max_size} elements: characterizations")
    agree = rep.check("distributivity-characterizations-agree",
                      "element splitting, distributive filter lattice and order-ideal complements "
                      "of irreducible filters are equivalent")
    irr_c = rep.check("irreducible-iff-prime-order-ideal-complement",
                      "on a distributive M, F is irreducible iff M \\ F is a ∧-prime order ideal")
    op_c = rep.check("optimal-iff-prime-frink-ideal-complement",
                     "on a distributive M, F is optimal iff M \\ F is a ∧-prime Frink ideal")
    inside = rep.check("irreducible-within-optimal", "every irreducible filter is optimal")
    equal = rep.check("optimal-equals-irreducible", "on a distributive M every optimal filter is irreducible")
    count = dist = 0
    for M in meet_semilattices(max_size):
        count += 1
        verdicts = M.distributivity_report()
        agree.record(len(set(verdicts.values())) == 1, order=_shape(M), verdicts=verdicts)
        irr, ops = set(M.irreducible_filters), set(M.optimal_filters)
        inside.record(irr <= ops, order=_shape(M))
        if not all(verdicts.values()):
            continue
        dist += 1
        frink = set(M.frink_ideals)
        for F in range(1 << M.size):
            I = M.full & ~F
            prime = M.is_wedge_prime(I)
            irr_c.record((F in irr) == (prime and is_order_ideal(M.poset, I)),
                         order=_shape(M), F=bits.members(F))
            op_c.record((F in ops) == (prime and I in frink), order=_shape(M), F=bits.members(F))
        equal.record(irr == ops, order=_shape(M))
    return Sweep(rep, count, dist)


def envelope_sweep(max_size: int = SWEEP_CAP, max_len: int = 3) -> Sweep:
    """The representation σ and the distributive envelope on every distributive semilattice."""
    rep = Report(f"distributive meet-semilattices on at most {max_size} elements: envelope")
    cover = rep.check("sigma-cover-condition",
                      f"⋂↑bᵢ ⊆ ↑a iff σ(a) ⊆ ⋃σ(bᵢ), for up to {max_len} elements bᵢ")
    sup = rep.check("sigma-sup-homomorphism", "σ: M → L(M) is a sup-homomorphism")
    fil = rep.check("envelope-filter-isomorphism",
                    "F ↦ filter generated by σ[F] is an isomorphism Fi(M) → Fi(L(M)) "
                    "with inverse σ⁻¹[·]")
    lattice = rep.check("envelope-is-distributive-lattice",
                        "L(M) is a union- and intersection-closed family containing σ[M]")
    count = dist = 0
    for M in meet_semilattices(max_size):
        count += 1
        if not M.is_distributive:
            continue
        dist += 1
        fails = sigma_condition_failures(M, max_len)
        cover.record(not fails, order=_shape(M), failures=fails[:3])
        env = distributive_envelope(M)
        bad = sup_homomorphism_failure(env.embedding, M, env.lattice)
        sup.record(bad is None, order=_shape(M), witness=bad)
        fails = filter_envelope_failures(M)
        fil.record(not fails, order=_shape(M), failures=[str(f) for f in fails[:3]])
        members = set(env.members)
        lattice.record(all(U | V in members and U & V in members for U in members for V in members)
                       and set(env.sigma.images) <= members, order=_shape(M))
    return Sweep(rep, count, dist)


SWEEPS: dict[str, Callable[[int], Sweep]] = {
    "characterization": characterization_sweep,
    "envelope": envelope_sweep,
}
