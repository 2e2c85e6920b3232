import os
import tempfile

import pytest
from sympy import QQ

from quartseq.data_container import EvenQuartic, Point, WeierstrassModel
from quartseq.pipeline.pipeline_component import FixedSequenceConstruction, MestreConstruction


@pytest.fixture(scope="function")
def test_data_path():
    with tempfile.TemporaryDirectory() as newpath:
        old_cwd = os.getcwd()
        os.chdir(newpath)
        yield newpath
        os.chdir(old_cwd)


@pytest.fixture(scope="session")
def curve_17() -> WeierstrassModel:
    """y^2 = x^3 + 17, rank 2 with trivial torsion."""
    return WeierstrassModel(0, 0, 17)


@pytest.fixture(scope="session")
def curve_17_points():
    return [Point(QQ(-2), QQ(3)), Point(QQ(-1), QQ(4)), Point(QQ(2), QQ(5))]


@pytest.fixture(scope="session")
def curve_1() -> WeierstrassModel:
    """y^2 = x^3 + 1, torsion Z/6."""
    return WeierstrassModel(0, 0, 1)


@pytest.fixture(scope="session")
def x_fourth_curve() -> EvenQuartic:
    """y^2 = x^4, through every (x, x^2)."""
    return EvenQuartic(1, 0, 0)


@pytest.fixture(scope="session")
def mestre_symbolic() -> MestreConstruction:
    return MestreConstruction()


@pytest.fixture(scope="session")
def mestre_at_3_4() -> MestreConstruction:
    return MestreConstruction(QQ(3, 4))


@pytest.fixture(scope="session")
def fixed_at_3() -> FixedSequenceConstruction:
    return FixedSequenceConstruction(3, count=3)
