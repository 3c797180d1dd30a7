import random

import pytest

from canonzeta.exactnum import Q


@pytest.fixture
def rng():
    return random.Random(20241016)


def rand_q(rng, lo=-9, hi=9):
    den = rng.randint(1, 7)
    return Q(rng.randint(lo, hi), den)
