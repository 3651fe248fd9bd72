"""Basis actions, the annihilation operators, and coefficient solving."""

import pytest

from vertexskein import partitions as pt
from vertexskein import recursion as rec
from vertexskein import skeinops as sk
from vertexskein import vertexcore as vc
from vertexskein.qscalar import (
    QScalar, FramedScalar, ONE, Z_VAR, F_ONE)

BOX = (1,)


def state_of(triple, bound=6):
    return sk.SkeinState({sk.pure_label(triple): F_ONE}, bound)


def test_unknot_eigenvalue_action():
    out = sk.apply_p(0, 0, 2, state_of(((), (2,), ())))
    coef = out.coefficient(sk.pure_label(((), (2,), ())))
    inv_z = ONE / Z_VAR
    assert coef == FramedScalar.a_power(2) * inv_z - \
        FramedScalar.a_power(2, -1) * inv_z


def test_meridian_eigenvalues_carry_content():
    lam = (2, 1)
    st = state_of((lam, (), ()))
    plus = sk.apply_p(1, 0, 1, st).coefficient(sk.pure_label((lam, (), ())))
    base = sk.apply_p(0, 0, 1, st).coefficient(sk.pure_label((lam, (), ())))
    assert plus - base == FramedScalar.a_power(1) * \
        (Z_VAR * pt.content_polynomial(lam))
    minus = sk.apply_p(-1, 0, 1, st).coefficient(
        sk.pure_label((lam, (), ())))
    assert minus - base == -FramedScalar.a_power(1, -1) * \
        (Z_VAR * pt.content_polynomial(pt.transpose(lam)))


def test_box_addition_actions():
    st = state_of(((1,), (), ()))
    grown = sk.apply_p(0, 1, 1, st)
    labels = set(grown.coeffs)
    assert labels == {sk.pure_label((a, (), ()))
                      for a in pt.add_corners((1,))}
    framed = sk.apply_p(-1, 1, 1, st)
    for label, coef in framed.coeffs.items():
        beta = label[0][0]
        want = FramedScalar.a_power(1, -1) * \
            QScalar.s_power(pt.kappa((1,)) - pt.kappa(beta))
        assert coef == want


def test_box_removal_emits_mixed_sector():
    st = state_of(((2,), (), ()))
    out = sk.apply_p(0, -1, 1, st)
    assert out.coefficient(sk.pure_label(((1,), (), ()))) == F_ONE
    assert out.coefficient((((2,), BOX), ((), ()), ((), ()))) == F_ONE
    out = sk.apply_p(1, -1, 1, st)
    assert out.coefficient((((2,), BOX), ((), ()), ((), ()))) == \
        FramedScalar.a_power(1, -1)


def test_unsupported_and_mixed_errors():
    st = state_of(((), (), ()))
    with pytest.raises(sk.UnsupportedActionError):
        sk.apply_p(2, 2, 1, st)
    mixed = sk.SkeinState({((BOX, BOX), ((), ()), ((), ())): F_ONE}, 4)
    with pytest.raises(sk.MixedSectorError):
        sk.apply_p(0, 0, 1, mixed)


def test_operator_a1_printed_coefficients():
    a = sk.operator_a(1)
    fa = FramedScalar.a_power
    assert a.coefficient_of(1, (0, 0)) == fa(1, -1)
    assert a.coefficient_of(1, (1, 0)) == -fa(1, -1)
    assert a.coefficient_of(1, (0, 1)) == -fa(3, 2)
    assert a.coefficient_of(2, (0, 0)) == fa(2) * fa(3, 2)
    assert a.coefficient_of(2, (-1, 1)) == fa(2)
    assert a.coefficient_of(2, (-1, 0)) == -(fa(2) * fa(3, 2))
    assert a.coefficient_of(3, (0, 0)) == fa(3)
    assert a.coefficient_of(3, (0, -1)) == -F_ONE
    assert a.coefficient_of(3, (1, -1)) == fa(3)


def test_operator_cyclic_rotation():
    a1 = sk.operator_a(1)
    a2 = sk.operator_a(2)
    # rotating components 1->2->3 carries A_1's terms onto A_2's
    rotated = {((c % 3) + 1, idx) for c, idx, _ in a1.terms}
    assert rotated == {(c, idx) for c, idx, _ in a2.terms}


def test_annihilation_small():
    table = vc.build_table(4, "T")
    z = sk.build_z(4, table)
    for k in (1, 2, 3):
        rep = sk.verify_annihilation(sk.operator_a(k), z, 3)
        assert rep["violations"] == []


def test_truncation_guard():
    table = vc.build_table(2, "T")
    z = sk.build_z(2, table)
    with pytest.raises(sk.TruncationError):
        sk.verify_annihilation(sk.operator_a(1), z, 2)


def test_coefficient_constraint_matches_residual_pairs():
    table = vc.build_table(4, "T")
    pairs = {1: ("R32", "R31"), 2: ("R13", "R12"), 3: ("R21", "R23")}
    axis = {1: 3, 2: 1, 3: 2}
    for t in vc.triples_up_to(3):
        for k in (1, 2, 3):
            low, high = pairs[k]
            parts = sk.coefficient_constraint(k, t)
            acc = {0: ONE * QScalar.from_int(0),
                   2: ONE * QScalar.from_int(0)}
            for triple, fs in parts.items():
                split = fs.split_by_degree(axis[k])
                for deg, piece in split.items():
                    acc[deg] = acc[deg] + \
                        piece.as_qscalar() * table[triple]
            assert acc[0] == -rec.residual(low, t, table.values)
            assert acc[2] == rec.residual(high, t, table.values)


PRINTED_LEADING = {
    ((), (), ()): ONE,
    ((), (), BOX): -ONE / Z_VAR,
    ((), BOX, BOX): ONE + ONE / (Z_VAR * Z_VAR),
    (BOX, (), BOX): ONE + ONE / (Z_VAR * Z_VAR),
}


def test_monomial_solver_reproduces_printed_operator():
    solved = sk.solve_monomial_coefficients(PRINTED_LEADING)
    want = sk.operator_a(1)
    assert len(solved) == 9
    for c, i, _ in want.terms:
        assert solved[(c, i)] == want.coefficient_of(c, i), (c, i)


def test_monomial_solver_rejects_perturbed_data():
    leading = dict(PRINTED_LEADING)
    leading[((), (), BOX)] = leading[((), (), BOX)] * QScalar.q_power(1)
    with pytest.raises(sk.NoSolutionError):
        sk.solve_monomial_coefficients(leading)


def test_mixed_sector_cancellation_combination():
    # (P_(0,-1) - a P_(1,-1)) leaves no mixed-sector term.
    for lam in pt.partitions_up_to(4):
        st = state_of((lam, (), ()), bound=10)
        out = sk.apply_p(0, -1, 1, st) + \
            sk.apply_p(1, -1, 1, st).scaled(-FramedScalar.a_power(1))
        for label in out.coeffs:
            assert label[0][1] == ()


def test_diagonal_combination_identities():
    from vertexskein import symfunc as sf
    for lam in pt.partitions_up_to(5):
        st = state_of((lam, (), ()), bound=10)
        label = sk.pure_label((lam, (), ()))
        diff = (sk.apply_p(0, 0, 1, st) +
                sk.apply_p(1, 0, 1, st).scaled(-F_ONE)).coefficient(label)
        want = -FramedScalar.a_power(1) * (
            sf.s_box_at(sf.point(lam, 1)) - sf.s_box_at(sf.Q_RHO))
        assert diff == want
        diff = (sk.apply_p(-1, 0, 1, st) +
                sk.apply_p(0, 0, 1, st).scaled(-F_ONE)).coefficient(label)
        want = -FramedScalar.a_power(1, -1) * (
            sf.s_box_at(sf.point(pt.transpose(lam), 1)) -
            sf.s_box_at(sf.Q_RHO))
        assert diff == want
