"""Tests for the commuting-variable series and annihilation operators."""

import random

import pytest

from vertexskein import abelian as ab
from vertexskein import vertexcore as vc
from vertexskein.qscalar import QScalar, ONE

L3 = ab.LaurentSeries3


def random_series(rng, n, nterms=6):
    terms = {}
    for _ in range(nterms):
        e = (rng.randint(0, n), rng.randint(0, n), rng.randint(0, n))
        if sum(e) > n:
            continue
        terms[e] = QScalar.s_power(rng.randint(-3, 3)) * \
            QScalar.from_int(rng.randint(-4, 4))
    return L3(n, terms, lower=(0, 0, 0))


def test_series_ring_basics():
    rng = random.Random(11)
    a = random_series(rng, 6)
    b = random_series(rng, 6)
    c = random_series(rng, 6)
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    one = L3.one(6)
    assert a * one == a
    assert (a - a).is_zero()


def test_truncation_drops_high_degree():
    f = L3.monomial(3, (2, 2, 0))
    assert f.is_zero()
    g = L3.monomial(4, (2, 2, 0)) * L3.monomial(4, (1, 0, 0))
    assert g.is_zero()


def test_lower_bound_enforced():
    with pytest.raises(ValueError):
        L3(4, {(-1, 0, 0): ONE}, lower=(0, 0, 0))
    f = L3.monomial(4, (-1, 0, 2), lower=(-1, 0, 0))
    assert f.coefficient((-1, 0, 2)) == ONE


def test_substitute_signs_involution():
    rng = random.Random(12)
    f = random_series(rng, 6)
    g = f.substitute_signs(-1)
    assert g.substitute_signs(-1) == f
    for e, c in g.terms.items():
        assert c == (f.coefficient(e) if sum(e) % 2 == 0
                     else -f.coefficient(e))


def test_quantum_torus_relation_on_random_series():
    rng = random.Random(2024)
    for i in (1, 2, 3):
        for _ in range(8):
            f = random_series(rng, 5)
            lhs = ab.apply_generator(
                ("Y", i, 1), ab.apply_generator(("X", i, 1), f))
            rhs = ab.apply_generator(
                ("X", i, 1), ab.apply_generator(("Y", i, 1), f)) \
                .scaled(QScalar.q_power(1))
            assert lhs == rhs


def test_generator_inverses():
    rng = random.Random(7)
    f = random_series(rng, 4)
    g = ab.apply_generator(("Y", 2, -1), ab.apply_generator(("Y", 2, 1), f))
    assert g == f
    h = ab.apply_generator(("X", 1, -1), ab.apply_generator(("X", 1, 1), f))
    # x_1 then x_1^(-1) only loses terms pushed past the truncation bound.
    for e, c in h.terms.items():
        assert c == f.coefficient(e)


def test_divisibility_error_at_lower_bound():
    f = L3.monomial(4, (0, 1, 0))
    with pytest.raises(ab.DivisibilityError):
        ab.apply_generator(("X", 1, -1), f)
    g = L3.monomial(4, (-1, 1, 0), lower=(-1, 0, 0))
    with pytest.raises(ab.DivisibilityError):
        ab.apply_generator(("X", 1, -1), g)


def test_euler_expansion_coefficients():
    n = 6
    f = ab.pochhammer((0, (1, 0, 0)), None, n)
    denom = ONE
    for j in range(n + 1):
        assert f.coefficient((j, 0, 0)) == denom.inverse()
        denom = denom * (ONE - QScalar.q_power(j + 1))
    with pytest.raises(ValueError):
        ab.pochhammer((0, (0, 0, 0)), None, n)


def test_finite_pochhammer_matches_scalar_factors():
    n = 5
    f = ab.pochhammer((1, (0, 1, 0)), 3, n)
    # Coefficient of x_2^j is the elementary signed q-binomial sum; check
    # against direct expansion of the three factors.
    direct = L3.one(n)
    for s in range(3):
        direct = direct * (L3.one(n) - L3.monomial(
            n, (0, 1, 0), QScalar.s_power(1) * QScalar.q_power(s)))
    assert f == direct


def test_specialize_z_row_convention():
    n = 4
    table = vc.build_table(n, "T").values
    f = ab.specialize_z(table, n)
    assert f.coefficient((0, 0, 0)) == ONE
    assert f.coefficient((2, 0, 0)) == table[((2,), (), ())]
    assert f.coefficient((1, 1, 2)) == table[((1,), (1,), (2,))]
    with pytest.raises(ValueError):
        ab.specialize_z({((), (), ()): ONE}, 2)


def test_direct_sum_matches_specialization_with_sign():
    n = 5
    direct = ab.abelian_z_direct(n).substitute_signs(-1)
    table = vc.build_table(n, "T").values
    # Place the table on one-column labels instead of one-row labels.
    column = {}
    for k1 in range(n + 1):
        for k2 in range(n + 1 - k1):
            for k3 in range(n + 1 - k1 - k2):
                rows = ((k1,) if k1 else (), (k2,) if k2 else (),
                        (k3,) if k3 else ())
                cols = tuple((1,) * k for k in (k1, k2, k3))
                column[rows] = table[cols]
    assert direct == ab.specialize_z(column, n)


def test_main_operators_annihilate_specialization():
    n = 5
    table = vc.build_table(n, "T").values
    f = ab.specialize_z(table, n)
    for i in (1, 2, 3):
        report = ab.verify_abelian_annihilation("main", i, f, n - 1)
        assert report["violations"] == []
        assert report["operator"] == "main A%d" % i


def test_annihilation_rejects_excess_degree():
    f = L3.one(3)
    with pytest.raises(ab.TruncationError):
        ab.verify_abelian_annihilation("main", 1, f, 3)


def test_dequantized_structure():
    for i in (1, 2, 3):
        groups = ab.abelian_operator("main", i).dequantized()
        assert [g[0] for g in groups] == [1, -1, -1]
        j = i % 3 + 1
        k = (i + 1) % 3 + 1
        assert groups[0][1] is None
        assert groups[1][1] == ("Y", j, -1)
        assert groups[2][1] == ("X", k, -1)
        for coef, outer, terms in groups:
            gens = [g for _, g in terms]
            assert gens[0] is None
            assert [c for c, _ in terms] == [1, -1, -1]


def test_unknown_operator_rejected():
    with pytest.raises(ValueError):
        ab.abelian_operator("main", 4)
    with pytest.raises(ValueError):
        ab.apply_generator(("Z", 1, 1), L3.one(2))


def test_augmentation_branch_first_orders():
    jets = ab.solve_augmentation_branch(2)
    for i, jet in enumerate(jets):
        assert jet[(0, 0, 0)] == ONE
        e = tuple(1 if j == i else 0 for j in range(3))
        assert jet[e] == -ONE
    # The solved jets clear the three dequantized equations exactly.
    n = 3
    eqs = ab._branch_equations(
        [ab.LaurentSeries3(n, jet, lower=(0, 0, 0)) for jet in jets], n)
    for eq in eqs:
        for e, c in eq.terms.items():
            assert sum(e) > 2 + 1 or c.is_zero(), (e, c.text())
    with pytest.raises(ValueError):
        ab.solve_augmentation_branch(0)
