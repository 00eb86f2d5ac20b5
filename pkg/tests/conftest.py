import pytest

from latquot import standard_catalog


def all_partitions(items):
    """Every set partition of ``items`` (brute-force oracle helper)."""
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in all_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1:]
        yield [[head]] + part


@pytest.fixture(scope="session")
def catalog():
    return standard_catalog()


@pytest.fixture(scope="session")
def small_catalog(catalog):
    """Catalog lattices small enough for exhaustive congruence work."""
    return [named for named in catalog if len(named.lattice) <= 8]
