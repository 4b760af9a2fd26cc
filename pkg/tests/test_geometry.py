from hypothesis import given
from hypothesis import strategies as st

from cabcodes import GF, PointSet, hermitian, is_semi_grid, x_support, y_fiber

HERMITIAN_Q2 = [(0, 0), (0, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)]


def test_hermitian_q2_examples():
    _, P = hermitian(2)
    assert P.points == tuple(HERMITIAN_Q2)
    assert [int(a) for a in x_support(P)] == [0, 1, 2, 3]
    assert [int(b) for b in y_fiber(P, 0)] == [0, 1]
    assert [int(b) for b in y_fiber(P, 1)] == [2, 3]  # w and w^2
    assert is_semi_grid(P) == (True, 2)
    assert P.n_x == 4


def test_small_examples():
    F = GF(5)
    assert x_support(PointSet(F, [])) == []
    assert [int(a) for a in x_support(PointSet(F, [(0, 0), (0, 1)]))] == [0]
    assert y_fiber(PointSet(F, [(0, 0)]), 3) == []
    assert is_semi_grid(PointSet(F, [(0, 0), (1, 0), (1, 1)]))[0] is False


def test_grid_is_semi_grid():
    F = GF(7)
    P = PointSet(F, [(x, y) for x in (1, 4, 6) for y in (0, 2, 3, 5)])
    assert is_semi_grid(P) == (True, 4)


def test_keep_order_and_take():
    F = GF(5)
    P = PointSet(F, [(3, 1), (0, 2)], keep_order=True)
    assert P.points == ((3, 1), (0, 2))
    assert P.take([1]).points == ((0, 2),)


def test_duplicates_rejected():
    import pytest

    with pytest.raises(ValueError):
        PointSet(GF(5), [(1, 1), (1, 1)])
    with pytest.raises(ValueError):
        PointSet(GF(5), [(5, 0)])


points = st.sets(st.tuples(st.integers(0, 15), st.integers(0, 15)), max_size=80)


@given(points)
def test_fibers_partition_points(pts):
    P = PointSet(GF(16), pts)
    assert sum(len(y_fiber(P, a)) for a in x_support(P)) == len(P)
    semi, nu = is_semi_grid(P)
    if semi and len(P):
        assert len(P) == P.n_x * nu


@given(st.sets(st.integers(0, 15), min_size=1, max_size=16), st.sets(st.integers(0, 15), min_size=1, max_size=16))
def test_products_are_semi_grids(xs, ys):
    P = PointSet(GF(16), [(x, y) for x in xs for y in ys])
    assert is_semi_grid(P) == (True, len(ys))
