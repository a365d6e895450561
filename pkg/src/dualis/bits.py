"""Subsets of a finite carrier encoded as Python ints.

Bit ``i`` of a mask is set when element ``i`` belongs to the subset. A family
of subsets is a sorted tuple of distinct masks, which gives every family a
canonical order (ascending integer value).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


def full(n: int) -> int:
    return (1 << n) - 1


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def size(mask: int) -> int:
    return mask.bit_count()


def contains(mask: int, e: int) -> bool:
    return bool(mask >> e & 1)


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, the empty one included, in ascending order."""
    elems = members(mask)
    for bits in range(1 << len(elems)):
        sub = 0
        for j, e in enumerate(elems):
            if bits >> j & 1:
                sub |= 1 << e
        yield sub


def family(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks)))


def intersect_all(masks: Iterable[int], universe: int) -> int:
    """Intersection of ``masks``; the empty intersection is ``universe``."""
    out = universe
    for m in masks:
        out &= m
    return out


def union_all(masks: Iterable[int]) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def union_closure(masks: Iterable[int]) -> tuple[int, ...]:
    closed = set(masks)
    frontier = list(closed)
    while frontier:
        new = []
        for a in frontier:
            for b in list(closed):
                c = a | b
                if c not in closed:
                    closed.add(c)
                    new.append(c)
        frontier = new
    return family(closed)


def intersection_closure(masks: Iterable[int]) -> tuple[int, ...]:
    closed = set(masks)
    frontier = list(closed)
    while frontier:
        new = []
        for a in frontier:
            for b in list(closed):
                c = a & b
                if c not in closed:
                    closed.add(c)
                    new.append(c)
        frontier = new
    return family(closed)


def small_families(items: tuple[int, ...], max_len: int) -> Iterator[tuple[int, ...]]:
    """Subfamilies of ``items`` with 1..max_len members."""
    for k in range(1, min(max_len, len(items)) + 1):
        yield from combinations(items, k)


def format_mask(mask: int, labels: tuple[str, ...] | None = None) -> list:
    if labels is None:
        return members(mask)
    return [labels[i] for i in iter_bits(mask)]
