import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from groups.group_engine import build_g  # noqa: E402
from homology.chains import checkerboard_action  # noqa: E402
from quandles.cosets import build_tilde_r  # noqa: E402

FIXTURES = ROOT / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def g3():
    return build_g(1)


@pytest.fixture(scope="session")
def g5():
    return build_g(2)


@pytest.fixture(scope="session")
def tilde3():
    return build_tilde_r(1)


@pytest.fixture(scope="session")
def checkerboard(tilde3):
    return checkerboard_action(tilde3.quandle)
