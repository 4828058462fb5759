import random
from typing import List

import pytest

from pyknotslopes.diagram import BraidWord, braid_to_pd, parse_braid
from pyknotslopes.morse import braid_to_morse

RANDOM_SEED = 20240611


def random_braids(count: int, maxLength: int = 8, seed: int = RANDOM_SEED) -> List[BraidWord]:
    rng = random.Random(seed)
    braids = []
    for _ in range(count):
        strands = rng.randint(2, 4)
        length = rng.randint(1, maxLength)
        letters = tuple(rng.choice((-1, 1)) * rng.randint(1, strands - 1) for _ in range(length))
        braids.append(BraidWord(strands, letters))
    return braids


@pytest.fixture
def trefoil():
    return braid_to_pd(parse_braid("2: 1 1 1"), name="trefoil")


@pytest.fixture
def trefoil_morse():
    return braid_to_morse(parse_braid("2: 1 1 1"), name="trefoil")


@pytest.fixture
def figure_eight():
    return braid_to_pd(parse_braid("3: 1 -2 1 -2"), name="figure-8")


@pytest.fixture
def kink():
    return braid_to_pd(parse_braid("2: 1"), name="kink")
