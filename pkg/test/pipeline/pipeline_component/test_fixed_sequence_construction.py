import pytest
from sympy import QQ

from quartseq.algorithm.ellmodel import torsion_order_or_infinite
from quartseq.algorithm.polyalg import T, BinaryQuartic, substitute
from quartseq.commons.errors import DegenerateSequence, ParameterError, SingularSystem
from quartseq.data_container import CheckLedger, EvenQuartic
from quartseq.data_container.record_schema import PASS
from quartseq.pipeline.pipeline_component import (
    FixedSequenceConstruction,
    solve_abc,
    square_relation,
)
from quartseq.pipeline.pipeline_schema import Pipeline

LAMBDAS_AT_3 = (QQ(17, 13), QQ(-153, 455), QQ(1, 35))


def killed_discriminant(construction, rho):
    H = construction.h_quartic()
    p, q, w = H.ring.gens
    return BinaryQuartic.from_form(substitute(H, q, w * rho), p, w).discriminant


def test_solve_abc() -> None:
    # y = x^2 on y^2 = x^4 at x = 4, 9, 16
    assert solve_abc(QQ(3), QQ(16), QQ(81), QQ(256)) == (1, 0, 0)
    assert solve_abc(QQ(3), QQ(5), QQ(-5), QQ(5)) == (0, 0, 25)


def test_solve_abc_symbolic() -> None:
    assert solve_abc(T, (T - 1) ** 4, T**4, (T + 1) ** 4) == (1, 0, 0)


@pytest.mark.parametrize("t", [QQ(0), QQ(1, 2), QQ(-1, 2)])
def test_solve_abc_singular(t) -> None:
    with pytest.raises(SingularSystem):
        solve_abc(t, QQ(1), QQ(1), QQ(1))


def test_square_relation_at_3() -> None:
    relation = square_relation(QQ(3), QQ(-2))
    assert relation.coefficients == LAMBDAS_AT_3
    assert relation.total == 1
    assert relation.evaluate(QQ(16), QQ(81), QQ(256)) == 1


def test_symbolic_square_relation() -> None:
    relation = square_relation(T, QQ(-2))
    assert relation.total == 1
    assert relation.specialize(QQ(3)).coefficients == LAMBDAS_AT_3


def test_square_relation_base_offset() -> None:
    with pytest.raises(ParameterError):
        square_relation(QQ(3), QQ(0))


def test_quadric_parametrisation(fixed_at_3) -> None:
    d, e, f, g = fixed_at_3.quadric_parametrize()
    one, zero = QQ(1), QQ(0)
    assert [form(one, one, one) for form in (d, e, f, g)] == [-1, -1, -1, 1]
    lambda3 = LAMBDAS_AT_3[2]
    assert [form(zero, zero, one) for form in (d, e, f, g)] == [
        lambda3,
        lambda3,
        -lambda3,
        lambda3,
    ]
    relation = fixed_at_3.relation(QQ(-2))
    assert relation.evaluate(d, e, f) == g**2


def test_h_quartic_leading_coefficient(fixed_at_3) -> None:
    H = fixed_at_3.h_quartic()
    assert H.coeff(H.ring.gens[0] ** 4) == QQ(289, 169)


def test_kill_discriminant(fixed_at_3) -> None:
    qkill = fixed_at_3.kill_discriminant()
    assert qkill.candidates[0] == qkill.rho
    for rho in qkill.candidates:
        assert not killed_discriminant(fixed_at_3, rho)
    perturbed = fixed_at_3.rho + QQ(1, 1000)
    if perturbed not in qkill.candidates:
        assert killed_discriminant(fixed_at_3, perturbed)


def test_extract_h(fixed_at_3) -> None:
    h = fixed_at_3.extract_h()
    H = fixed_at_3.h_quartic()
    p, q, w = H.ring.gens
    killed = BinaryQuartic.from_form(substitute(H, q, w * fixed_at_3.rho), p, w)
    assert h**2 == killed.as_form()
    assert h.coeff(h.ring.gens[0] ** 2) in (QQ(17, 13), QQ(-17, 13))


def test_k_quartic(fixed_at_3) -> None:
    K = fixed_at_3.k_quartic()
    assert K.A == QQ(289, 169)
    assert K.discriminant


def test_five_term_curve(fixed_at_3) -> None:
    curve, points = fixed_at_3.five_term_curve(QQ(1), QQ(0))
    assert curve == EvenQuartic(0, 0, QQ(289, 169))
    assert [point.x for point in points] == [1, 4, 9, 16, 25]


def test_jacobian_point_has_infinite_order(fixed_at_3) -> None:
    jacobian, point, _ = fixed_at_3.jacobian_and_point()
    assert jacobian.contains(point)
    assert torsion_order_or_infinite(jacobian, point) is None


@pytest.mark.slow
def test_jacobian_walk(fixed_at_3) -> None:
    records = fixed_at_3.jacobian_walk(QQ(3), 3)
    assert len(records) == 3
    assert all(record.failures() == [] for record in records)
    assert len({record.key for record in records}) == 3
    multiples = [record.provenance["multiple"] for record in records]
    assert multiples == sorted(multiples)
    assert all(record.provenance["construction"] == "fixed" for record in records)
    assert fixed_at_3.jacobian_walk(QQ(3), 3) is records


@pytest.mark.slow
def test_run(fixed_at_3) -> None:
    pipeline = Pipeline(pipeline_components=[fixed_at_3])
    records = pipeline.run()
    assert len(records) == 3
    assert all(record.offsets == ["-2", "-1", "0", "1", "2", "3"] for record in records)


@pytest.mark.parametrize("count", [0, -1, "2"])
def test_count_parameter(count) -> None:
    with pytest.raises(ParameterError):
        FixedSequenceConstruction(QQ(3), count=count)


def test_walk_cap_factor_parameter() -> None:
    with pytest.raises(ParameterError):
        FixedSequenceConstruction(QQ(3), walk_cap_factor=0)


def test_symbolic_walk() -> None:
    construction = FixedSequenceConstruction()
    with pytest.raises(ParameterError):
        construction.jacobian_walk(T, 1)
    with pytest.raises(ParameterError):
        construction.run(Pipeline())


@pytest.mark.parametrize("t", [QQ(0), QQ(1, 2), QQ(-1)])
def test_degenerate_sequence(t) -> None:
    with pytest.raises(DegenerateSequence):
        FixedSequenceConstruction(t)


@pytest.mark.slow
def test_record_checks() -> None:
    ledger = CheckLedger()
    FixedSequenceConstruction().record_checks(ledger)
    for name in ("eq1.sum_to_one", "quadric.identity", "qkill.disc_zero", "h.square_identity"):
        assert ledger[name].status == PASS
    assert ledger["kbar.A_is_lambda1_squared"].status == PASS
