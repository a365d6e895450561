"""Finite algebras given by operation tables, homomorphisms and congruences."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Sequence

from .config import ORDER_CAP, carrier_cap
from .errors import CarrierTooLarge, NotAHomomorphism
from .terms import Signature


@dataclass(frozen=True)
class FiniteAlgebra:
    """Operation tables are flat row-major tuples: ``f(a0, .., ak)`` sits at
    index ``a0 * n**(k-1) + ... + ak``; a constant is a one-entry table."""

    signature: Signature
    size: int
    tables: tuple[tuple[str, tuple[int, ...]], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        cap = carrier_cap(ORDER_CAP)
        if self.size > cap:
            raise CarrierTooLarge(self.size, cap, "algebra")
        if self.size < 1:
            raise ValueError("algebras are non-empty")
        ops = dict(self.tables)
        if set(ops) != set(self.signature.names) or len(ops) != len(self.tables):
            raise ValueError("need exactly one table per connective")
        for op, arity in self.signature.connectives:
            table = ops[op]
            if len(table) != self.size ** arity:
                raise ValueError(f"table of {op} has {len(table)} entries, expected {self.size ** arity}")
            if any(not 0 <= v < self.size for v in table):
                raise ValueError(f"table of {op} leaves the carrier")
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError("one label per element")
        object.__setattr__(self, "_ops", ops)

    @classmethod
    def from_functions(cls, signature: Signature, size: int, functions: Mapping, labels=None,
                       name: str = "") -> "FiniteAlgebra":
        tables = []
        for op, arity in signature.connectives:
            f = functions[op]
            tables.append((op, tuple(f(*args) for args in product(range(size), repeat=arity))))
        return cls(signature, size, tuple(tables), labels, name)

    def table(self, op: str) -> tuple[int, ...]:
        return self._ops[op]

    def apply(self, op: str, *args: int) -> int:
        idx = 0
        for a in args:
            idx = idx * self.size + a
        return self._ops[op][idx]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    @property
    def names(self) -> tuple[str, ...]:
        """Labels, falling back to the element indices written as strings."""
        return self.labels if self.labels else tuple(str(a) for a in range(self.size))

    def element(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def elements(self, *labels: str) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.element(lab)
        return m

    def reduct(self, signature: Signature) -> "FiniteAlgebra":
        tables = tuple((op, self._ops[op]) for op in signature.names)
        return FiniteAlgebra(signature, self.size, tables, self.labels, self.name)


def homomorphism_failure(h: Sequence[int], A: FiniteAlgebra, B: FiniteAlgebra) -> dict | None:
    if len(h) != A.size or any(not 0 <= v < B.size for v in h):
        return {"reason": "map is not total into the target"}
    for op, arity in A.signature.connectives:
        if op not in B.signature:
            return {"reason": f"target lacks connective {op}"}
        for args in product(range(A.size), repeat=arity):
            lhs = h[A.apply(op, *args)]
            rhs = B.apply(op, *(h[a] for a in args))
            if lhs != rhs:
                return {"op": op, "args": list(args), "image": lhs, "expected": rhs}
    return None


def is_homomorphism(h: Sequence[int], A: FiniteAlgebra, B: FiniteAlgebra) -> bool:
    return homomorphism_failure(h, A, B) is None


def require_homomorphism(h: Sequence[int], A: FiniteAlgebra, B: FiniteAlgebra) -> None:
    bad = homomorphism_failure(h, A, B)
    if bad is not None:
        raise NotAHomomorphism("map is not a homomorphism", bad)


def compose_maps(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """``g ∘ f``: first ``f``, then ``g``."""
    return tuple(g[x] for x in f)


def identity_map(A: FiniteAlgebra) -> tuple[int, ...]:
    return tuple(range(A.size))


def compatibility_failure(A: FiniteAlgebra, cls: Sequence[int]) -> dict | None:
    """First translation that separates two ``cls``-equivalent elements.

    ``cls[a]`` is a class label for ``a``; one argument position is varied at
    a time, which suffices for compatibility by transitivity.
    """
    n = A.size
    for op, arity in A.signature.connectives:
        for pos in range(arity):
            for rest in product(range(n), repeat=arity - 1):
                seen: dict[int, tuple[int, int]] = {}
                for a in range(n):
                    args = rest[:pos] + (a,) + rest[pos:]
                    v = A.apply(op, *args)
                    prev = seen.get(cls[a])
                    if prev is None:
                        seen[cls[a]] = (a, v)
                    elif cls[prev[1]] != cls[v]:
                        return {"op": op, "position": pos, "pair": [prev[0], a],
                                "context": list(rest)}
    return None


def largest_congruence_below(A: FiniteAlgebra, cls: Sequence[int]) -> tuple[int, ...]:
    """Largest congruence contained in the equivalence with class labels ``cls``.

    Repeatedly splits classes along basic translations until stable; returns
    class labels normalised to the least member of each class.
    """
    n = A.size
    current = _normalise(cls)
    while True:
        signature_of = []
        for a in range(n):
            sig = [current[a]]
            for op, arity in A.signature.connectives:
                for pos in range(arity):
                    for rest in product(range(n), repeat=arity - 1):
                        args = rest[:pos] + (a,) + rest[pos:]
                        sig.append(current[A.apply(op, *args)])
            signature_of.append(tuple(sig))
        refined = _normalise(signature_of)
        if refined == current:
            return current
        current = refined


def _normalise(keys: Sequence) -> tuple[int, ...]:
    first: dict = {}
    out = []
    for a, k in enumerate(keys):
        out.append(first.setdefault(k, a))
    return tuple(out)


def quotient(A: FiniteAlgebra, cls: Sequence[int]) -> tuple[FiniteAlgebra, tuple[int, ...]]:
    """Quotient by a congruence given as class labels; returns it with the projection."""
    reps = sorted(set(_normalise(cls)))
    norm = _normalise(cls)
    index = {r: i for i, r in enumerate(reps)}
    proj = tuple(index[norm[a]] for a in range(A.size))
    tables = []
    for op, arity in A.signature.connectives:
        tables.append((op, tuple(proj[A.apply(op, *(reps[i] for i in args))]
                                 for args in product(range(len(reps)), repeat=arity))))
    labels = tuple(A.label(r) for r in reps) if A.labels else None
    return FiniteAlgebra(A.signature, len(reps), tuple(tables), labels, f"{A.name}/~"), proj
