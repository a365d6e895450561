"""Finite posets and the filter/ideal notions that live at the pure order level."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import bits
from .config import ORDER_CAP, carrier_cap
from .errors import CarrierTooLarge, NotAPartialOrder


@dataclass(frozen=True)
class FinitePoset:
    """A partial order on the indices ``0..size-1``.

    ``up[i]`` is the mask of ``↑i``. Use :meth:`from_matrix` or
    :meth:`from_pairs` to build one from the usual descriptions.
    """

    size: int
    up: tuple[int, ...]

    def __post_init__(self):
        cap = carrier_cap(ORDER_CAP)
        if self.size > cap:
            raise CarrierTooLarge(self.size, cap, "poset")
        if len(self.up) != self.size:
            raise NotAPartialOrder("need one up-set per element")
        for i, u in enumerate(self.up):
            if not u >> i & 1:
                raise NotAPartialOrder(f"not reflexive at {i}")
            if u >> self.size:
                raise NotAPartialOrder(f"up-set of {i} leaves the carrier")
            for j in bits.iter_bits(u):
                if j != i and self.up[j] >> i & 1:
                    raise NotAPartialOrder(f"not antisymmetric at {i}, {j}")
                if self.up[j] & ~u:
                    raise NotAPartialOrder(f"not transitive at {i} <= {j}")

    @classmethod
    def from_matrix(cls, leq: Sequence[Sequence[bool]]) -> "FinitePoset":
        n = len(leq)
        return cls(n, tuple(bits.mask_of(j for j in range(n) if leq[i][j]) for i in range(n)))

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[tuple[int, int]]) -> "FinitePoset":
        """Reflexive-transitive closure of the given ``(lower, upper)`` pairs."""
        up = [1 << i for i in range(size)]
        for a, b in pairs:
            up[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for i in range(size):
                closed = up[i]
                for j in bits.iter_bits(up[i]):
                    closed |= up[j]
                if closed != up[i]:
                    up[i] = closed
                    changed = True
        return cls(size, tuple(up))

    @classmethod
    def chain(cls, n: int) -> "FinitePoset":
        return cls.from_pairs(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def antichain(cls, n: int) -> "FinitePoset":
        return cls(n, tuple(1 << i for i in range(n)))

    @cached_property
    def down(self) -> tuple[int, ...]:
        down = [0] * self.size
        for i, u in enumerate(self.up):
            for j in bits.iter_bits(u):
                down[j] |= 1 << i
        return tuple(down)

    @property
    def full(self) -> int:
        return bits.full(self.size)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(i, j) for j in range(self.size)] for i in range(self.size)]

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs ``(a, b)`` with ``a < b`` and nothing strictly between."""
        out = []
        for a in range(self.size):
            above = self.up[a] & ~(1 << a)
            for b in bits.iter_bits(above):
                between = above & self.down[b] & ~(1 << b)
                if not between:
                    out.append((a, b))
        return out

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.size, self.down)

    def _check(self, U: int) -> None:
        if U >> self.size:
            raise ValueError(f"subset {U:#b} does not fit a carrier of size {self.size}")

    def lower_bounds(self, U: int) -> int:
        return bits.intersect_all((self.down[a] for a in bits.iter_bits(U)), self.full)

    def upper_bounds(self, U: int) -> int:
        return bits.intersect_all((self.up[a] for a in bits.iter_bits(U)), self.full)

    def bottom(self) -> int | None:
        b = self.lower_bounds(self.full)
        return b.bit_length() - 1 if b else None

    def top(self) -> int | None:
        t = self.upper_bounds(self.full)
        return t.bit_length() - 1 if t else None


def up_closure(P: FinitePoset, U: int) -> int:
    P._check(U)
    return bits.union_all(P.up[a] for a in bits.iter_bits(U))


def down_closure(P: FinitePoset, U: int) -> int:
    P._check(U)
    return bits.union_all(P.down[a] for a in bits.iter_bits(U))


def is_up_set(P: FinitePoset, U: int) -> bool:
    return up_closure(P, U) == U


def is_down_set(P: FinitePoset, U: int) -> bool:
    return down_closure(P, U) == U


def max_elements(P: FinitePoset, U: int) -> int:
    P._check(U)
    return bits.mask_of(a for a in bits.iter_bits(U) if P.up[a] & U == 1 << a)


def min_elements(P: FinitePoset, U: int) -> int:
    P._check(U)
    return bits.mask_of(a for a in bits.iter_bits(U) if P.down[a] & U == 1 << a)


def is_up_directed(P: FinitePoset, U: int) -> bool:
    """Every pair in ``U`` has an upper bound inside ``U``; true for the empty set."""
    elems = bits.members(U)
    return all(P.up[a] & P.up[b] & U for i, a in enumerate(elems) for b in elems[i + 1:])


def is_down_directed(P: FinitePoset, U: int) -> bool:
    elems = bits.members(U)
    return all(P.down[a] & P.down[b] & U for i, a in enumerate(elems) for b in elems[i + 1:])


def up_sets(P: FinitePoset) -> tuple[int, ...]:
    return tuple(U for U in range(1 << P.size) if is_up_set(P, U))


def down_sets(P: FinitePoset) -> tuple[int, ...]:
    return tuple(U for U in range(1 << P.size) if is_down_set(P, U))


def order_filters(P: FinitePoset) -> tuple[int, ...]:
    return tuple(U for U in up_sets(P) if U and is_down_directed(P, U))


def order_ideals(P: FinitePoset) -> tuple[int, ...]:
    return tuple(U for U in down_sets(P) if U and is_up_directed(P, U))


def is_order_ideal(P: FinitePoset, U: int) -> bool:
    return bool(U) and is_down_set(P, U) and is_up_directed(P, U)


def is_order_filter(P: FinitePoset, U: int) -> bool:
    return bool(U) and is_up_set(P, U) and is_down_directed(P, U)


def is_frink_ideal(P: FinitePoset, I: int) -> bool:
    """Every lower bound of the upper bounds of a finite subset of ``I`` lies in ``I``.

    All subsets of ``I`` are tried, the empty one included.
    """
    P._check(I)
    for sub in bits.submasks(I):
        if P.lower_bounds(P.upper_bounds(sub)) & ~I:
            return False
    return True


def frink_ideal_generate(P: FinitePoset, B: int) -> int:
    """Elements ``a`` such that the upper bounds of some finite ``B' ⊆ B`` all lie above ``a``."""
    P._check(B)
    out = 0
    for sub in bits.submasks(B):
        out |= P.lower_bounds(P.upper_bounds(sub))
    return out


def frink_closure(P: FinitePoset, B: int) -> int:
    """Fast form of :func:`frink_ideal_generate` for a finite carrier.

    Upper bounds shrink as the subset grows, so ``B' = B`` already yields
    every element the existential quantifier can reach.
    """
    return P.lower_bounds(P.upper_bounds(B))


def frink_ideals(P: FinitePoset) -> tuple[int, ...]:
    return tuple(I for I in range(1 << P.size) if frink_closure(P, I) == I)
