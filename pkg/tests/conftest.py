import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qpencil.field import GF


@pytest.fixture
def g2():
    return GF(1)


@pytest.fixture
def g4():
    return GF(2)


@pytest.fixture
def g8():
    return GF(3)


@pytest.fixture
def g16():
    return GF(4)
