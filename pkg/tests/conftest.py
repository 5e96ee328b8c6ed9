import sys
from functools import lru_cache
from itertools import combinations
from math import gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gotonum.semigroup import NumericalSemigroup

# the semigroups every worked example lives in
NAMED_GENERATORS = [
    (2, 3),
    (3, 5),
    (5, 11),
    (9, 19),
    (4, 6, 7),
    (4, 7, 9),
    (4, 5, 11),
    (5, 6, 13),
    (7, 9, 20),
    (7, 11, 20),
    (9, 19, 21),
    (11, 14, 21),
]


@lru_cache(maxsize=None)
def semigroup(*gens) -> NumericalSemigroup:
    return NumericalSemigroup(list(gens))


@lru_cache(maxsize=1)
def full_family():
    """Every minimal numerical semigroup with 2 or 3 generators, all <= 25."""
    family = []
    for a1, a2 in combinations(range(2, 26), 2):
        if gcd(a1, a2) == 1:
            family.append(semigroup(a1, a2))
    for trip in combinations(range(2, 26), 3):
        if gcd(gcd(trip[0], trip[1]), trip[2]) != 1:
            continue
        S = semigroup(*trip)
        if S.generators == trip:
            family.append(S)
    return family


@pytest.fixture(scope="session")
def named_semigroups():
    return [semigroup(*gens) for gens in NAMED_GENERATORS]


@pytest.fixture(scope="session")
def family():
    return full_family()
