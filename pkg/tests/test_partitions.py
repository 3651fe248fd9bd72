"""Partition combinatorics used throughout the library."""

from hypothesis import given, strategies as st

from vertexskein import partitions as pt
from vertexskein.qscalar import QScalar, ZERO


def partitions(max_size=8):
    return st.integers(min_value=0, max_value=max_size).map(
        lambda n: pt.enumerate_partitions(n)).flatmap(st.sampled_from)


def test_size_and_transpose_examples():
    assert pt.size(()) == 0
    assert pt.transpose((3, 1)) == (2, 1, 1)
    assert pt.transpose((2, 2)) == (2, 2)


@given(partitions())
def test_transpose_involution(lam):
    assert pt.transpose(pt.transpose(lam)) == lam
    assert pt.size(pt.transpose(lam)) == pt.size(lam)


@given(partitions())
def test_kappa_antisymmetry(lam):
    assert pt.kappa(pt.transpose(lam)) == -pt.kappa(lam)


@given(partitions())
def test_kappa_is_twice_content_sum(lam):
    contents = [j - i for i, row in enumerate(lam) for j in range(row)]
    assert pt.kappa(lam) == 2 * sum(contents)


@given(partitions())
def test_content_polynomial_sums_q_contents(lam):
    want = ZERO
    for i, row in enumerate(lam):
        for j in range(row):
            want = want + QScalar.q_power(j - i)
    assert pt.content_polynomial(lam) == want


@given(partitions(6))
def test_corner_duality(lam):
    for alpha in pt.add_corners(lam):
        assert pt.size(alpha) == pt.size(lam) + 1
        assert lam in pt.remove_corners(alpha)
    for gamma in pt.remove_corners(lam):
        assert pt.size(gamma) == pt.size(lam) - 1
        assert lam in pt.add_corners(gamma)


def test_add_corners_example():
    assert set(pt.add_corners((2, 1))) == {(3, 1), (2, 2), (2, 1, 1)}
    assert set(pt.remove_corners((2, 1))) == {(1, 1), (2,)}


def test_subdiagrams_and_contains():
    subs = set(pt.subdiagrams((2, 1)))
    assert subs == {(), (1,), (2,), (1, 1), (2, 1)}
    assert pt.contains((3, 2), (2, 2))
    assert not pt.contains((3,), (1, 1))


@given(partitions(6))
def test_subdiagrams_are_contained(lam):
    for eta in pt.subdiagrams(lam):
        assert pt.contains(lam, eta)


def test_enumeration_counts_and_order():
    counts = [len(pt.enumerate_partitions(n)) for n in range(8)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15]
    assert tuple(pt.enumerate_partitions(4)) == \
        ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_partitions_up_to():
    up = pt.partitions_up_to(3)
    assert up == [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]
