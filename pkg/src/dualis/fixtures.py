"""The shipped fixture documents, parsed on first use."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .workbench.document import WorkbenchDocument, parse_document


def fixture_text(name: str) -> str:
    return resources.files("dualis.data").joinpath(f"{name}.duals").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def load(name: str = "corpus") -> WorkbenchDocument:
    return parse_document(fixture_text(name))


def algebra(name: str, document: str = "corpus"):
    return load(document).algebras[name]


def logic(name: str, document: str = "corpus"):
    return load(document).logics[name]


def hom(name: str, document: str = "corpus"):
    """``(mapping, source, target)`` of a fixture homomorphism."""
    return load(document).hom(name)
