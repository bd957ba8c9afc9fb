import pytest

from affhecke import multiplicity, rootdata


@pytest.fixture(scope="session")
def tables():
    """Session-shared multiplicity tables, computed once per case."""
    cache = {}

    def get(family, rank, mu):
        key = (family, rank, tuple(mu))
        if key not in cache:
            datum = rootdata.create(family, rank)
            cache[key] = multiplicity.compute(datum, tuple(mu))
        return cache[key]

    return get


#: the ten reference cases: (family, rank, internal mu, golden file stem)
REFERENCE_CASES = [
    ("GL", 4, (1, 1, 0, 0), "GL4_1-1-0-0"),
    ("GL", 5, (1, 1, 0, 0, 0), "GL5_1-1-0-0-0"),
    ("GL", 6, (1, 1, 0, 0, 0, 0), "GL6_1-1-0-0-0-0"),
    ("GL", 3, (2, 2, 0), "GL3_2-2-0"),
    ("GL", 3, (3, 1, 0), "GL3_3-1-0"),
    ("GL", 4, (2, 0, 0, 0), "GL4_2-0-0-0"),
    ("GL", 4, (2, 1, 0, 0), "GL4_2-1-0-0"),
    ("GSp", 2, (1, 1, 1), "GSp4_1-1-0-0"),
    ("GSp", 3, (1, 1, 1, 1), "GSp6_1-1-1-0-0-0"),
    ("G2", 2, (1, 0), "G2_2-1-0"),
]

ADM_COUNTS = {
    "GL4_1-1-0-0": 33,
    "GL5_1-1-0-0-0": 131,
    "GL6_1-1-0-0-0-0": 473,
    "GL3_2-2-0": 19,
    "GL3_3-1-0": 49,
    "GL4_2-0-0-0": 65,
    "GL4_2-1-0-0": 143,
    "GSp4_1-1-0-0": 13,
    "GSp6_1-1-1-0-0-0": 79,
    "G2_2-1-0": 41,
}
