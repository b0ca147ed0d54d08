import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from toric_origami.fileformat import FIXTURE_NAMES, load_fixture  # noqa: E402

ACYCLIC_FIXTURES = ("t_square", "t_fold2", "t_ring4", "t_chain4", "t_cube2", "t_figure1")
N2_FIXTURES = ("t_square", "t_fold2", "t_ring4", "t_chain4", "t_figure1")


@pytest.fixture(scope="session")
def fixtures():
    return {name: load_fixture(name) for name in FIXTURE_NAMES}
