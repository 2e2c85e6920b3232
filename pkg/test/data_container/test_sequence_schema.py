import pytest
from sympy import QQ

from quartseq.algorithm.polyalg import T, polynomial_ring
from quartseq.commons.errors import DegenerateSequence
from quartseq.data_container import (
    HalfOffsetSequence,
    MestreDecomposition,
    ParamPoint,
    SequenceSpec,
    SequenceWitness,
    SquareRelation,
)
from quartseq.data_container.sequence_schema import (
    FIXED_OFFSETS,
    HALF_OFFSETS,
    collision_values,
    is_consecutive_square_sequence,
)


@pytest.fixture(scope="function")
def witness_at_3() -> SequenceWitness:
    """y = x^2 on y^2 = x^4 for the squares 1, 4, ..., 36."""
    sequence = SequenceSpec(QQ(3))
    return SequenceWitness(sequence, *(x**2 for x in sequence.witness_x_values()))


def test_collision_values() -> None:
    assert collision_values(HALF_OFFSETS) == [QQ(k, 2) for k in range(-4, 5)]
    assert collision_values(FIXED_OFFSETS) == [QQ(k, 2) for k in range(-5, 4)]


@pytest.mark.parametrize("t", [QQ(0), QQ(1, 2), QQ(-2), QQ(3, 2)])
def test_half_offset_collisions(t) -> None:
    with pytest.raises(DegenerateSequence):
        HalfOffsetSequence(t)


@pytest.mark.parametrize("t", [QQ(0), QQ(1, 2), QQ(-5, 2), QQ(3, 2)])
def test_fixed_collisions(t) -> None:
    with pytest.raises(DegenerateSequence):
        SequenceSpec(t)


def test_degenerate_sequence_message() -> None:
    with pytest.raises(DegenerateSequence) as error:
        SequenceSpec(QQ(0))
    assert error.value.exit_code == 2


def test_x_values() -> None:
    sequence = SequenceSpec(QQ(3))
    assert sequence.x_values() == [QQ(k**2) for k in range(1, 7)]
    assert sequence.witness_x_values() == [4, 9, 16, 1, 25, 36]
    assert HalfOffsetSequence(QQ(3, 4)).x_values()[0] == QQ(49, 16)


def test_symbolic_sequence() -> None:
    sequence = SequenceSpec(T)
    assert sequence.is_symbolic
    assert sequence.collision() is None
    assert sequence.x_value(QQ(1)) == (T + 1) ** 2
    assert sequence.specialize(QQ(3)).x_values() == SequenceSpec(QQ(3)).x_values()


def test_is_consecutive_square_sequence() -> None:
    squares = [QQ(k**2) for k in range(1, 7)]
    assert is_consecutive_square_sequence(QQ(3), FIXED_OFFSETS, squares)
    assert not is_consecutive_square_sequence(QQ(3), FIXED_OFFSETS, squares[::-1])
    assert not is_consecutive_square_sequence(QQ(3), FIXED_OFFSETS[:-1], squares[:-1] + [QQ(49)])
    gapped = FIXED_OFFSETS[:-1] + (QQ(4),)
    assert not is_consecutive_square_sequence(QQ(3), gapped, squares[:-1] + [QQ(49)])
    symbolic_squares = [(T + int(i)) ** 2 for i in FIXED_OFFSETS]
    assert is_consecutive_square_sequence(T, FIXED_OFFSETS, symbolic_squares)


def test_witness(witness_at_3, x_fourth_curve) -> None:
    points = witness_at_3.points()
    assert [point.x for point in points] == [QQ(k**2) for k in range(1, 7)]
    assert witness_at_3.lies_on(x_fourth_curve)
    assert not witness_at_3.has_zero()


def test_mestre_decomposition() -> None:
    x = polynomial_ring("x", QQ).gens[0]
    Q = x**6 + 1
    R = 3 * x**4 - x**2
    assert MestreDecomposition(Q**2 - R, Q, R).holds()
    assert not MestreDecomposition(Q**2, Q, R).holds()


def test_square_relation() -> None:
    relation = SquareRelation(QQ(-2), (T, 1 - 2 * T, T))
    assert relation.total == 1
    assert relation.evaluate(1, 1, 1) == 1
    assert relation.specialize(QQ(2)).coefficients == (2, -3, 2)


def test_param_point() -> None:
    ParamPoint(0, 0, 1)
    with pytest.raises(ValueError):
        ParamPoint(0, 0, 0)
