import pytest

import largesub as ls


@pytest.fixture(scope="session")
def corpus():
    """The full built-in verification corpus.  Session-scoped so the
    per-group caches (normal subgroups, series, radicals) are shared."""
    return ls.reference_corpus()


@pytest.fixture(scope="session")
def s4():
    return ls.symmetric_group(4)


@pytest.fixture(scope="session")
def a4():
    return ls.alternating_group(4)


@pytest.fixture(scope="session")
def a5():
    return ls.alternating_group(5)


@pytest.fixture(scope="session")
def sl23():
    return ls.special_linear_2_3()


@pytest.fixture(scope="session")
def a4xa4():
    return ls.direct_product(ls.alternating_group(4), ls.alternating_group(4))


@pytest.fixture(scope="session")
def small_zoo():
    """Small groups with varied structure, used for oracle comparisons."""
    return [
        ls.trivial_group(),
        ls.cyclic_group(2),
        ls.cyclic_group(6),
        ls.cyclic_group(12),
        ls.klein_four_group(),
        ls.dihedral_group(8),
        ls.dihedral_group(12),
        ls.quaternion_group(8),
        ls.symmetric_group(3),
        ls.symmetric_group(4),
        ls.alternating_group(4),
        ls.special_linear_2_3(),
        ls.direct_product(ls.cyclic_group(2), ls.symmetric_group(3)),
    ]
