import pytest

from dualis.fixtures import load


@pytest.fixture(scope="session")
def corpus():
    return load("corpus")


def masks(*sets):
    """Masks from sets of element indices, sorted as families are."""
    return tuple(sorted(sum(1 << i for i in s) for s in sets))
