"""Rule-presented logics evaluated on finite algebras.

A logic is given by finitely many rules ``γ1, .., γk ⊢ δ``; the consequence it
denotes is the least substitution-invariant finitary one containing them. On a
finite algebra its filters are therefore exactly the subsets closed under every
ground instance of every rule, and that is how everything here is computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Mapping

from . import bits
from .algebra import (
    FiniteAlgebra,
    compatibility_failure,
    largest_congruence_below,
    quotient,
)
from .config import RULE_VARIABLE_CAP
from .errors import CharacterizationMismatch, HypothesisFailure, NotCongruential
from .order import FinitePoset, is_down_set, is_order_ideal
from .report import Report
from .terms import Signature, Term, evaluate, parse_term, variables

ASSERTION_FLAGS = ("congruential", "filter-distributive", "has-theorems", "protoalgebraic")
WITNESS_TAGS = ("pc", "pdi", "ddt", "pie")


@dataclass(frozen=True)
class Rule:
    premises: tuple[Term, ...]
    conclusion: Term

    @property
    def variables(self) -> tuple[str, ...]:
        seen: list[str] = []
        for t in self.premises + (self.conclusion,):
            for v in variables(t):
                if v not in seen:
                    seen.append(v)
        return tuple(seen)

    def __str__(self) -> str:
        lhs = ", ".join(str(p) for p in self.premises)
        return f"{lhs} |- {self.conclusion}" if lhs else f"|- {self.conclusion}"


def parse_rule(text: str, signature: Signature) -> Rule:
    lhs, _, rhs = text.partition("|-")
    premises = tuple(parse_term(p, signature) for p in lhs.split(",") if p.strip()) if lhs.strip() else ()
    return Rule(premises, parse_term(rhs, signature))


@dataclass(frozen=True)
class LogicPresentation:
    name: str
    signature: Signature
    rules: tuple[Rule, ...]
    assertions: frozenset[str] = frozenset()
    witnesses: tuple[tuple[str, tuple[Term, ...]], ...] = ()
    variable_cap: int = field(default=RULE_VARIABLE_CAP, compare=False)

    def __post_init__(self):
        for r in self.rules:
            if len(r.variables) > self.variable_cap:
                raise ValueError(f"rule {r} uses {len(r.variables)} variables, above the cap of "
                                 f"{self.variable_cap}")
        unknown = set(self.assertions) - set(ASSERTION_FLAGS)
        if unknown:
            raise ValueError(f"unknown assertion(s) {sorted(unknown)}")
        for tag, _ in self.witnesses:
            if tag not in WITNESS_TAGS:
                raise ValueError(f"unknown witness tag {tag!r}")

    @classmethod
    def from_text(cls, name: str, signature: Signature, rules: list[str],
                  assertions=(), witnesses: Mapping[str, list[str] | str] | None = None):
        parsed = tuple(parse_rule(r, signature) for r in rules)
        wit = []
        for tag, terms in (witnesses or {}).items():
            if isinstance(terms, str):
                terms = [terms]
            wit.append((tag, tuple(parse_term(t, signature) for t in terms)))
        return cls(name, signature, parsed, frozenset(assertions), tuple(wit))

    @property
    def has_theorems(self) -> bool:
        """The least consequence has a theorem iff some rule has no premises."""
        return any(not r.premises for r in self.rules)

    def witness(self, tag: str) -> tuple[Term, ...] | None:
        for t, terms in self.witnesses:
            if t == tag:
                return terms
        return None

    def asserts(self, flag: str) -> bool:
        return flag in self.assertions


@dataclass(frozen=True)
class RouteComparison:
    """Optimal and irreducible S-filters computed by definition and by complements."""

    optimal_by_definition: tuple[int, ...]
    optimal_by_complement: tuple[int, ...]
    irreducible_by_definition: tuple[int, ...]
    irreducible_by_complement: tuple[int, ...] | None
    hypotheses_hold: bool

    @property
    def agree(self) -> bool:
        return (self.optimal_by_definition == self.optimal_by_complement
                and self.irreducible_by_definition == self.irreducible_by_complement)


class FilterSystem:
    """The filters of one logic on one finite algebra, with everything derived from them."""

    def __init__(self, logic: LogicPresentation, algebra: FiniteAlgebra):
        for op, arity in logic.signature.connectives:
            if op not in algebra.signature or algebra.signature.arity(op) != arity:
                raise ValueError(f"algebra {algebra.name!r} does not interpret {op}/{arity}")
        self.logic = logic
        self.algebra = algebra
        self.size = algebra.size
        self.full = bits.full(algebra.size)
        self._fg: dict[int, int] = {}

    # closure

    @cached_property
    def instances(self) -> tuple[tuple[int, int], ...]:
        """Distinct ground instances as ``(premise mask, conclusion)`` pairs."""
        A = self.algebra
        out = set()
        for rule in self.logic.rules:
            vs = rule.variables
            for values in product(range(A.size), repeat=len(vs)):
                v = dict(zip(vs, values))
                prem = bits.mask_of(evaluate(p, A, v) for p in rule.premises)
                out.add((prem, evaluate(rule.conclusion, A, v)))
        return tuple(sorted(out))

    def is_filter(self, F: int) -> bool:
        return all(F >> c & 1 for prem, c in self.instances if bits.is_subset(prem, F))

    def fg(self, B: int) -> int:
        hit = self._fg.get(B)
        if hit is not None:
            return hit
        F = B
        changed = True
        while changed:
            changed = False
            for prem, c in self.instances:
                if not F >> c & 1 and bits.is_subset(prem, F):
                    F |= 1 << c
                    changed = True
        self._fg[B] = F
        return F

    @cached_property
    def filters(self) -> tuple[int, ...]:
        start = self.fg(0)
        seen = {start}
        frontier = [start]
        while frontier:
            new = []
            for F in frontier:
                for a in range(self.size):
                    if not F >> a & 1:
                        G = self.fg(F | 1 << a)
                        if G not in seen:
                            seen.add(G)
                            new.append(G)
            frontier = new
        return bits.family(seen)

    def join(self, F: int, G: int) -> int:
        return self.fg(F | G)

    @property
    def has_theorems(self) -> bool:
        return self.fg(0) != 0

    # specialization order

    @cached_property
    def principal(self) -> tuple[int, ...]:
        """``Fg(a)``, which is also the up-set of ``a`` in the specialization order."""
        return tuple(self.fg(1 << a) for a in range(self.size))

    def leq(self, a: int, b: int) -> bool:
        return bool(self.principal[a] >> b & 1)

    @cached_property
    def equivalence(self) -> tuple[int, ...]:
        """Class label (least member) of each element under ``≡_S``."""
        first: dict[int, int] = {}
        return tuple(first.setdefault(self.principal[a], a) for a in range(self.size))

    @cached_property
    def is_partial_order(self) -> bool:
        return len(set(self.principal)) == self.size

    @cached_property
    def poset(self) -> FinitePoset:
        if not self.is_partial_order:
            raise HypothesisFailure("the specialization order is not antisymmetric", ["s-algebra"])
        return FinitePoset(self.size, self.principal)

    @cached_property
    def congruence_witness(self) -> dict | None:
        return compatibility_failure(self.algebra, self.equivalence)

    @property
    def is_congruential(self) -> bool:
        return self.congruence_witness is None

    @cached_property
    def is_s_algebra(self) -> bool:
        """No congruence other than the identity lies inside ``≡_S``."""
        return len(set(largest_congruence_below(self.algebra, self.equivalence))) == self.size

    @cached_property
    def is_filter_distributive(self) -> bool:
        Fs, j = self.filters, self.join
        return all(F & j(G, H) == j(F & G, F & H) for F, G, H in product(Fs, repeat=3))

    @property
    def standing_hypotheses(self) -> bool:
        return self.is_congruential and self.is_s_algebra

    # ideals

    def meet_of_principals(self, I: int) -> int:
        return bits.intersect_all((self.principal[b] for b in bits.iter_bits(I)), self.full)

    def is_s_ideal(self, I: int) -> bool:
        """Closed under: ``⋂{Fg(b) : b ∈ I'} ⊆ Fg(a)`` for finite ``I' ⊆ I`` gives ``a ∈ I``.

        The intersection shrinks as ``I'`` grows, so ``I' = I`` is the strongest instance.
        """
        bound = self.meet_of_principals(I)
        return all(I >> a & 1 for a in range(self.size) if bits.is_subset(bound, self.principal[a]))

    def _meets_dominated(self, I: int, candidates) -> bool:
        bound = self.meet_of_principals(I)
        return all(G & I for G in candidates if bits.is_subset(bound, G))

    @cached_property
    def generated_by_nonempty(self) -> tuple[int, ...]:
        """``Fg(B)`` for every non-empty ``B ⊆ A``, duplicates removed."""
        return bits.family(self.fg(B) for B in range(1, 1 << self.size))

    def is_strong_by_definition(self, I: int) -> bool:
        """Every non-empty ``B`` whose filter contains ``⋂Fg[I]`` generates a filter meeting ``I``."""
        return self.is_s_ideal(I) and self._meets_dominated(I, self.generated_by_nonempty)

    def is_strong_by_down_set(self, I: int) -> bool:
        """Shortcut valid on congruential S-algebras: a down-set meeting every dominated filter."""
        nonempty = (F for F in self.filters if F)
        return is_down_set(self.poset, I) and self._meets_dominated(I, nonempty)

    def is_strong_s_ideal(self, I: int) -> bool:
        verdict = self.is_strong_by_definition(I)
        if self.standing_hypotheses:
            fast = self.is_strong_by_down_set(I)
            if fast != verdict:
                raise CharacterizationMismatch("strong S-ideal routes disagree",
                                               {"ideal": I, "definition": verdict, "down-set": fast})
        return verdict

    @cached_property
    def s_ideals(self) -> tuple[int, ...]:
        return tuple(I for I in range(1 << self.size) if self.is_s_ideal(I))

    @cached_property
    def strong_ideals(self) -> tuple[int, ...]:
        return tuple(I for I in self.s_ideals if self.is_strong_by_definition(I))

    @cached_property
    def bottom_family(self) -> int | None:
        """First non-empty antichain (in mask order) generating the whole algebra."""
        for U in range(1, 1 << self.size):
            elems = bits.members(U)
            if any(self.leq(a, b) for a in elems for b in elems if a != b):
                continue
            if self.fg(U) == self.full:
                return U
        return None

    # optimal and irreducible filters

    @cached_property
    def optimal_by_definition(self) -> tuple[int, ...]:
        Fs, Is = self.filters, self.strong_ideals
        out = []
        for F in Fs:
            for I in Is:
                if F & I:
                    continue
                if any(G != F and bits.is_subset(F, G) and not G & I for G in Fs):
                    continue
                if any(J != I and bits.is_subset(I, J) and not J & F for J in Is):
                    continue
                out.append(F)
                break
        return tuple(out)

    @cached_property
    def optimal_by_complement(self) -> tuple[int, ...]:
        strong = set(self.strong_ideals)
        return tuple(F for F in self.filters if self.full & ~F in strong)

    @cached_property
    def irreducible_by_definition(self) -> tuple[int, ...]:
        out = []
        for F in self.filters:
            if F == self.full:
                continue
            above = [G for G in self.filters if G != F and bits.is_subset(F, G)]
            if not any(G & H == F for i, G in enumerate(above) for H in above[i:]):
                out.append(F)
        return tuple(out)

    @cached_property
    def irreducible_by_complement(self) -> tuple[int, ...] | None:
        if not self.is_partial_order:
            return None
        return tuple(F for F in self.filters if is_order_ideal(self.poset, self.full & ~F))

    @cached_property
    def routes(self) -> RouteComparison:
        hyp = self.standing_hypotheses and self.is_filter_distributive
        cmp = RouteComparison(self.optimal_by_definition, self.optimal_by_complement,
                              self.irreducible_by_definition, self.irreducible_by_complement, hyp)
        if hyp and not cmp.agree:
            raise CharacterizationMismatch("optimal/irreducible routes disagree", {"routes": cmp})
        return cmp

    @property
    def optimal(self) -> tuple[int, ...]:
        self.routes
        return self.optimal_by_definition

    @property
    def irreducible(self) -> tuple[int, ...]:
        self.routes
        return self.irreducible_by_definition

    def is_s_prime(self, X: int) -> bool:
        if X == self.full:
            return False
        return all(B & X for B in range(1, 1 << self.size) if self.fg(B) & X)

    # separation

    def _largest_avoiding(self, F: int, I: int) -> int:
        candidates = [G for G in self.filters if bits.is_subset(F, G) and not G & I]
        maximal = [G for G in candidates
                   if not any(H != G and bits.is_subset(G, H) for H in candidates)]
        return maximal[0]

    def separate_optimal(self, F: int, I: int) -> int:
        problems = []
        if not self.is_filter(F):
            problems.append("filter")
        if not self.is_strong_by_definition(I):
            problems.append("strong-ideal")
        if F & I:
            problems.append("disjoint")
        if not self.standing_hypotheses:
            problems.append("congruential-s-algebra")
        if problems:
            raise HypothesisFailure("cannot separate: hypotheses fail", problems)
        Q = self._largest_avoiding(F, I)
        if Q not in self.optimal_by_definition:
            raise CharacterizationMismatch("maximal filter avoiding a strong ideal is not optimal",
                                           {"filter": F, "ideal": I, "found": Q})
        return Q

    def separate_irreducible(self, F: int, I: int) -> int:
        problems = []
        if not self.is_filter(F):
            problems.append("filter")
        if not self.is_partial_order or not is_order_ideal(self.poset, I):
            problems.append("order-ideal")
        if F & I:
            problems.append("disjoint")
        if not self.standing_hypotheses:
            problems.append("congruential-s-algebra")
        if problems:
            raise HypothesisFailure("cannot separate: hypotheses fail", problems)
        Q = self._largest_avoiding(F, I)
        if Q not in self.irreducible_by_definition:
            raise CharacterizationMismatch("maximal filter avoiding an order ideal is not irreducible",
                                           {"filter": F, "ideal": I, "found": Q})
        return Q


def filter_system(logic: LogicPresentation, algebra: FiniteAlgebra) -> FilterSystem:
    """Cached :class:`FilterSystem` of ``logic`` on the reduct of ``algebra`` to its language."""
    if algebra.signature != logic.signature:
        algebra = algebra.reduct(logic.signature)
    return _filter_system(logic, algebra)


@lru_cache(maxsize=512)
def _filter_system(logic: LogicPresentation, algebra: FiniteAlgebra) -> FilterSystem:
    return FilterSystem(logic, algebra)


@dataclass(frozen=True)
class TarskiQuotient:
    algebra: FiniteAlgebra
    projection: tuple[int, ...]
    filter_bijection_failures: tuple


def tarski_quotient(L: LogicPresentation, A: FiniteAlgebra) -> TarskiQuotient:
    """``A/≡_S`` with the check that ``F ↦ π[F]`` is a bijection of filter lattices."""
    fs = filter_system(L, A)
    if not fs.is_congruential:
        raise NotCongruential("≡_S is not a congruence", fs.congruence_witness)
    Q, proj = quotient(A, fs.equivalence)
    qs = filter_system(L, Q)

    def image(F):
        return bits.mask_of(proj[a] for a in bits.iter_bits(F))

    def preimage(G):
        return bits.mask_of(a for a in range(A.size) if G >> proj[a] & 1)

    failures = []
    images = [image(F) for F in fs.filters]
    if sorted(images) != list(qs.filters):
        failures.append(("onto", images, list(qs.filters)))
    for F in fs.filters:
        if preimage(image(F)) != F:
            failures.append(("saturated", F))
    for G in qs.filters:
        if not fs.is_filter(preimage(G)):
            failures.append(("preimage-filter", G))
    return TarskiQuotient(Q, proj, tuple(failures))


def check_filters(L: LogicPresentation, A: FiniteAlgebra) -> Report:
    """Asserted hypotheses on ``A`` and agreement of the two routes to optimal and irreducible filters."""
    fs = filter_system(L, A)
    A = fs.algebra
    rep = Report(f"{L.name}/{A.name}: filters")
    facts = {"congruential": fs.is_congruential, "filter-distributive": fs.is_filter_distributive,
             "has-theorems": fs.has_theorems}
    c = rep.check("assertions-hold", "every hypothesis the presentation asserts holds on the algebra")
    for flag, value in facts.items():
        if L.asserts(flag):
            c.record(value, flag=flag)
    c = rep.check("irreducible-within-optimal", "every irreducible S-filter is optimal")
    c.record(set(fs.irreducible_by_definition) <= set(fs.optimal_by_definition))
    hyp = fs.standing_hypotheses and fs.is_filter_distributive
    stmt_op = "optimal S-filters by maximal pairs equal those whose complement is a strong S-ideal"
    stmt_irr = "irreducible S-filters by definition equal those whose complement is an order ideal"
    if not hyp:
        why = "needs a congruential, filter-distributive S-algebra"
        rep.skip("optimal-routes-agree", stmt_op, why)
        rep.skip("irreducible-routes-agree", stmt_irr, why)
        return rep
    c = rep.check("optimal-routes-agree", stmt_op)
    for F in fs.filters:
        c.record((F in fs.optimal_by_definition) == (F in fs.optimal_by_complement),
                 F=bits.format_mask(F, A.labels))
    c = rep.check("irreducible-routes-agree", stmt_irr)
    for F in fs.filters:
        c.record((F in fs.irreducible_by_definition) == (F in fs.irreducible_by_complement),
                 F=bits.format_mask(F, A.labels))
    return rep


# module-level forms of the engine operations

def is_s_filter(L, A, F: int) -> bool:
    return filter_system(L, A).is_filter(F)


def s_filters_all(L, A) -> tuple[int, ...]:
    return filter_system(L, A).filters


def fg_s(L, A, B: int) -> int:
    return filter_system(L, A).fg(B)


def specialization(L, A) -> tuple[int, ...]:
    """Up-sets of the specialization quasiorder: entry ``a`` is ``{b : a ≤_S b}``."""
    return filter_system(L, A).principal


def is_s_algebra(L, A) -> bool:
    return filter_system(L, A).is_s_algebra


def is_congruential_on(L, A) -> bool:
    return filter_system(L, A).is_congruential


def is_filter_distributive_on(L, A) -> bool:
    return filter_system(L, A).is_filter_distributive


def s_ideals(L, A) -> tuple[int, ...]:
    return filter_system(L, A).s_ideals


def is_strong_s_ideal(L, A, I: int) -> bool:
    return filter_system(L, A).is_strong_s_ideal(I)


def has_bottom_family(L, A) -> tuple[bool, int | None]:
    U = filter_system(L, A).bottom_family
    return U is not None, U


def optimal_s_filters(L, A) -> tuple[int, ...]:
    return filter_system(L, A).optimal


def irreducible_s_filters(L, A) -> tuple[int, ...]:
    return filter_system(L, A).irreducible


def is_s_prime(L, A, X: int) -> bool:
    return filter_system(L, A).is_s_prime(X)


def separate_optimal(L, A, F: int, I: int) -> int:
    return filter_system(L, A).separate_optimal(F, I)


def separate_irreducible(L, A, F: int, I: int) -> int:
    return filter_system(L, A).separate_irreducible(F, I)
