import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cabcodes import GF, UniPoly, build_partition_tree, formal_derivative, tree_vanish
from cabcodes import univariate_interp, univariate_mpe
from cabcodes.upoly import mul, poly_divmod, poly_mul
from oracles import horner, lagrange_interp, oracle_for
from oracles import poly_mul as oracle_mul

FIELDS = [2, 4, 7, 9, 16, 25, 27, 256]


def P(F, *c):
    return UniPoly(F, c)


# -- frozen examples ------------------------------------------------------------


def test_mul_examples():
    F2, F7 = GF(2), GF(7)
    assert mul(P(F2, 1, 1), P(F2, 1, 1)) == P(F2, 1, 0, 1)
    f = P(F7, 3, 1, 4)
    assert f * P(F7, 1) == f
    assert mul(P(F7, -2 % 7, 1), P(F7, -5 % 7, 1)) == P(F7, 3, 0, 1)


def test_partition_tree_examples():
    F5 = GF(5)
    assert build_partition_tree([F5(3)]).root.is_leaf
    T = build_partition_tree([0, 1, 2], F5)
    assert T.root.points == (0, 1, 2)
    assert T.children({0, 1, 2}) == ((0, 1), (2,))
    T8 = build_partition_tree(range(8), GF(8))
    assert T8.depth == 3
    assert len(T8) == 15


def test_tree_vanish_examples():
    F7 = GF(7)
    assert tree_vanish(build_partition_tree([3], F7))[(3,)] == P(F7, 4, 1)
    assert tree_vanish(build_partition_tree([2, 5], F7))[(2, 5)] == P(F7, 3, 0, 1)
    F4 = GF(4)
    assert tree_vanish(build_partition_tree(range(4), F4))[(0, 1, 2, 3)] == P(F4, 0, 1, 0, 0, 1)


def test_mpe_examples():
    F5 = GF(5)
    assert univariate_mpe(P(F5, 1, 0, 1), [0, 1, 2]) == {0: 1, 1: 2, 2: 0}
    assert univariate_mpe(P(F5), [0, 1, 2]) == {0: 0, 1: 0, 2: 0}
    assert univariate_mpe(P(F5, 4), [0, 3]) == {0: 4, 3: 4}


def test_interp_examples():
    F7 = GF(7)
    assert univariate_interp([0, 1], {0: 3, 1: 5}, F7) == P(F7, 3, 2)
    assert univariate_interp([0, 2, 4], [6, 6, 6], F7) == P(F7, 6)
    assert univariate_interp(range(7), range(7), F7) == P(F7, 0, 1)


def test_derivative_examples():
    F4, F7 = GF(4), GF(7)
    assert formal_derivative(P(F4, 0, 1, 0, 0, 1)) == P(F4, 1)
    assert formal_derivative(P(F7, 3, 0, 1)) == P(F7, 0, 2)
    assert formal_derivative(P(F7, 5)).is_zero()


def test_zero_degree():
    assert P(GF(3)).degree == float("-inf")
    assert P(GF(3), 0, 0, 1).degree == 2


def test_empty_tree_rejected():
    with pytest.raises(ValueError):
        build_partition_tree([], GF(5))


# -- oracle comparisons ---------------------------------------------------------


@pytest.mark.parametrize("q", FIELDS)
@pytest.mark.parametrize("sizes", [(3, 5), (31, 33), (70, 90), (130, 129)])
def test_mul_matches_schoolbook_oracle(q, sizes):
    # covers both the schoolbook and Karatsuba regimes
    F, O = GF(q), oracle_for(GF(q))
    rng = random.Random(q * 1000 + sizes[0])
    a = [rng.randrange(q) for _ in range(sizes[0])] + [1]
    b = [rng.randrange(q) for _ in range(sizes[1])] + [1]
    assert poly_mul(F, a, b) == oracle_mul(O, a, b)


@pytest.mark.parametrize("q", [7, 16, 25])
@pytest.mark.parametrize("da,db", [(20, 5), (200, 60), (300, 150)])
def test_divmod_identity(q, da, db):
    # Newton division kicks in for the larger cases
    F = GF(q)
    rng = random.Random(da + db + q)
    a = [rng.randrange(q) for _ in range(da)] + [1]
    b = [rng.randrange(q) for _ in range(db)] + [rng.randrange(1, q)]
    quo, rem = poly_divmod(F, a, b)
    assert len(rem) < len(b)
    back = (UniPoly(F, quo) * UniPoly(F, b) + UniPoly(F, rem)).c
    assert list(back) == a


@pytest.mark.parametrize("q", [16, 25, 256])
def test_mpe_matches_horner_large(q):
    F, O = GF(q), oracle_for(GF(q))
    rng = random.Random(q)
    h = P(F, *[rng.randrange(q) for _ in range(201)])
    S = rng.sample(range(q), min(q, 200))
    got = univariate_mpe(h, S)
    assert got == {x: horner(O, h.c, x) for x in S}


@pytest.mark.parametrize("q", [7, 9, 16])
def test_interp_matches_lagrange_oracle(q):
    F, O = GF(q), oracle_for(GF(q))
    rng = random.Random(q)
    S = rng.sample(range(q), q - 1)
    vals = [rng.randrange(q) for _ in S]
    assert list(univariate_interp(S, vals, F).c) == lagrange_interp(O, S, vals)


# -- properties -----------------------------------------------------------------

coeffs = st.lists(st.integers(0, 255), max_size=60)


@given(st.sampled_from(FIELDS), coeffs, coeffs, coeffs)
def test_ring_laws(q, a, b, c):
    F = GF(q)
    f, g, h = (P(F, *[x % q for x in v]) for v in (a, b, c))
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    if not f.is_zero() and not g.is_zero():
        assert (f * g).degree == f.degree + g.degree


@given(st.sampled_from(FIELDS), st.data())
def test_mpe_equals_horner(q, data):
    F, O = GF(q), oracle_for(GF(q))
    h = P(F, *data.draw(st.lists(st.integers(0, q - 1), max_size=80)))
    S = data.draw(st.sets(st.integers(0, q - 1), min_size=1, max_size=min(q, 80)))
    got = univariate_mpe(h, S)
    assert got == {x: horner(O, h.c, x) for x in S}


@given(st.sampled_from(FIELDS), st.data())
def test_interp_inverts_mpe(q, data):
    F = GF(q)
    S = sorted(data.draw(st.sets(st.integers(0, q - 1), min_size=1, max_size=min(q, 64))))
    h = P(F, *data.draw(st.lists(st.integers(0, q - 1), max_size=len(S))))
    assert univariate_interp(S, univariate_mpe(h, S), F) == h


@given(st.sampled_from(FIELDS), st.data())
def test_root_vanishes_exactly_on_S(q, data):
    F = GF(q)
    S = data.draw(st.sets(st.integers(0, q - 1), min_size=1, max_size=min(q, 64)))
    T = build_partition_tree(S, F)
    root = tree_vanish(T)[T.root.points]
    for x in range(q):
        assert (int(root(F(x))) == 0) == (x in S)


@given(st.sampled_from(FIELDS), st.data())
def test_tree_nodes_partition(q, data):
    S = data.draw(st.sets(st.integers(0, q - 1), min_size=2, max_size=min(q, 64)))
    T = build_partition_tree(S, GF(q))
    for node in T.nodes():
        if not node.is_leaf:
            left, right = node.left.points, node.right.points
            assert left + right == node.points
            assert len(left) == (len(node.points) + 1) // 2
