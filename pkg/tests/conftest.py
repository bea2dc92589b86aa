import sys
from pathlib import Path

import numpy as np
import pytest

import anycond as ac

sys.path.insert(0, str(Path(__file__).parent))

CATALOG_IDS = [e.id for e in ac.catalog()]


@pytest.fixture(params=CATALOG_IDS)
def catalog_entry(request):
    return ac.entry(request.param)


@pytest.fixture
def toric_1y():
    return ac.entry("toric-1Y").branching


@pytest.fixture
def toric_1z():
    return ac.entry("toric-1Z").branching


@pytest.fixture
def rep_s3_1x():
    return ac.entry("repS3-1X").branching


@pytest.fixture
def rep_s3_1y():
    return ac.entry("repS3-1Y").branching


def random_states(system, count, seed=0):
    rng = np.random.default_rng(seed)
    raw = rng.random((count, len(system))) + 1e-12
    return [ac.SectorState(system, row / row.sum()) for row in raw]
