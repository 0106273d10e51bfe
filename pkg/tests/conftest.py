import os

import pytest

BFILE_DIR = os.path.join(os.path.dirname(__file__), "data", "bfiles")


@pytest.fixture
def bfile_path():
    """Path of a committed b-file fixture, e.g. bfile_path("A008277")."""
    def path(oeis_id: str) -> str:
        return os.path.join(BFILE_DIR, f"b{oeis_id[1:]}.txt")
    return path
