import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cabcodes import GF, BiPoly, PointSet, bivariate_mpe, hermitian
from cabcodes.mpeval import evaluate_points
from oracles import eval_terms, horner, oracle_for


def random_poly(F, rng, dx, dy):
    return BiPoly(F, [[rng.randrange(F.q) for _ in range(dx + 1)] for _ in range(dy + 1)])


def test_examples():
    C, P = hermitian(2)
    F = C.field
    assert set(bivariate_mpe(BiPoly.monomial(F, 0, 0), P).values()) == {1}
    assert evaluate_points(BiPoly.monomial(F, 1, 0), P) == [0, 0, 1, 1, 2, 2, 3, 3]
    assert set(bivariate_mpe(C.H, P).values()) == {0}


def test_empty_rejected():
    with pytest.raises(ValueError):
        bivariate_mpe(BiPoly.monomial(GF(4), 1, 0), PointSet(GF(4), []))


@pytest.mark.parametrize("q", [16, 25])
def test_random_instances_match_horner(q):
    F, O = GF(q), oracle_for(GF(q))
    rng = random.Random(q)
    for _ in range(10):
        f = random_poly(F, rng, rng.randrange(31), rng.randrange(6))
        pts = rng.sample([(x, y) for x in range(q) for y in range(q)], rng.randrange(1, 201))
        got = bivariate_mpe(f, PointSet(F, pts))
        for x, y in pts:
            assert got[(x, y)] == horner(O, [horner(O, r, x) for r in f.rows], y)


def test_grid_row_then_column_either_order():
    F, O = GF(9), oracle_for(GF(9))
    rng = random.Random(1)
    f = random_poly(F, rng, 7, 4)
    xs, ys = [0, 2, 5, 8], [1, 3, 4]
    got = bivariate_mpe(f, PointSet(F, [(x, y) for x in xs for y in ys]))
    for x in xs:
        for y in ys:
            by_rows = horner(O, [horner(O, r, x) for r in f.rows], y)
            cols = {}
            for i, j, c in f.terms():
                cols.setdefault(i, []).append((j, c))
            by_cols = horner(
                O,
                [horner(O, [dict(cols.get(i, [])).get(j, 0) for j in range(len(f.rows))], y) for i in range(8)],
                x,
            )
            assert got[(x, y)] == by_rows == by_cols


@given(st.sampled_from([7, 16, 25]), st.data())
def test_linear_and_matches_oracle(q, data):
    F, O = GF(q), oracle_for(GF(q))
    rng = random.Random(data.draw(st.integers(0, 2**32)))
    f = random_poly(F, rng, rng.randrange(12), rng.randrange(4))
    g = random_poly(F, rng, rng.randrange(12), rng.randrange(4))
    pts = data.draw(st.sets(st.tuples(st.integers(0, q - 1), st.integers(0, q - 1)), min_size=1, max_size=60))
    P = PointSet(F, pts)
    ef, eg, efg = bivariate_mpe(f, P), bivariate_mpe(g, P), bivariate_mpe(f + g, P)
    for pt in P:
        assert efg[pt] == F.add(ef[pt], eg[pt])
        assert ef[pt] == eval_terms(O, f.terms(), *pt)
