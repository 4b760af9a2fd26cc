import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cabcodes import GF, BiPoly, Monomial, PointSet, WeightedOrder, bivariate_mpe, compute_Bhat
from cabcodes import hermitian, hermitian_like, norm_trace, reduce, vanishing_gb
from cabcodes.errors import ReducePreconditionError
from cabcodes.vanish import buchberger, divide
from oracles import division_remainder, oracle_for, rank, s_polynomial


def as_dict(f):
    return {(i, j): c for i, j, c in f.terms()}


def B(F, terms):
    return BiPoly.from_terms(F, terms)


def test_hermitian_q2_basis():
    C, P = hermitian(2)
    F = C.field
    G = vanishing_gb(P, C.order)
    assert set(G.elements) == {B(F, [(0, 2, 1), (0, 1, 1), (3, 0, 1)]), B(F, [(4, 0, 1), (1, 0, 1)])}
    assert G.leading == (Monomial(4, 0), Monomial(0, 2))
    assert G.g1_divides_x_nx and G.g2_pure_y_within_a


def test_small_bases():
    F, o = GF(4), WeightedOrder(2, 3)
    G = vanishing_gb(PointSet(F, [(0, 0)]), o)
    assert set(G.elements) == {B(F, [(0, 1, 1)]), B(F, [(1, 0, 1)])}
    G = vanishing_gb(PointSet(F, [(0, 0), (1, 0)]), o)
    assert set(G.elements) == {B(F, [(0, 1, 1)]), B(F, [(2, 0, 1), (1, 0, 1)])}


def test_bhat_examples():
    C, P = hermitian(2)
    assert compute_Bhat(P, C.order, 4) == [(0, 0), (1, 0), (0, 1), (2, 0)]
    assert compute_Bhat(P, C.order, 0) == [(0, 0)]
    assert len(compute_Bhat(P, C.order, 9)) == 8


def test_reduce_examples():
    C, P = hermitian(2)
    F = C.field
    G = vanishing_gb(P, C.order)
    # Y^2 has deg_Y = a, outside the guaranteed-bounds regime
    with pytest.raises(ReducePreconditionError):
        reduce(B(F, [(0, 2, 1)]), G)
    assert reduce(B(F, [(0, 2, 1)]), G, check=False) == B(F, [(3, 0, 1), (0, 1, 1)])
    f = B(F, [(1, 1, 2), (3, 0, 1)])
    assert reduce(f, G) == f
    assert reduce(B(F, [(4, 0, 1), (1, 0, 1)]), G, check=False).is_zero()


def point_sets():
    C, P = hermitian(2)
    yield "hermitian2", C, P
    C, P = hermitian(3)
    yield "hermitian3", C, P
    C, P = norm_trace(2, 3)
    yield "normtrace23", C, P
    C, P, S = hermitian_like(3, 2, 2)
    yield "hlike-all", C, P
    yield "hlike-semigrid", C, S
    rng = random.Random(5)
    C, P = hermitian(3)
    for k in (1, 5, 13):
        yield f"hermitian3-sub{k}", C, P.take(sorted(rng.sample(range(P.n), k)))


CASES = list(point_sets())


@pytest.mark.parametrize("name,C,P", CASES, ids=[c[0] for c in CASES])
def test_basis_invariants(name, C, P):
    O = oracle_for(C.field)
    G = vanishing_gb(P, C.order)
    key = C.order.key
    for g in G:
        assert set(bivariate_mpe(g, P).values()) == {0}
    ys = [lm.j for lm in G.leading]
    assert len(set(ys)) == len(ys)
    assert G.t <= C.order.a + 1
    assert G.g1_divides_x_nx
    assert G.pure_y_degree is not None and G.pure_y_degree <= C.order.a
    for g, h in itertools.combinations(G.elements, 2):
        assert division_remainder(O, s_polynomial(O, as_dict(g), as_dict(h), key), map(as_dict, G), key) == {}
    # reduced: no term of g other than its leading one is divisible by any leading monomial
    for g, lm in zip(G.elements, G.leading):
        assert g.coeff(*lm) == 1
        for mono in g.support():
            if mono != lm:
                assert not any(l.divides(mono) for l in G.leading)
    # standard monomials count the points
    std = [m for m in C.order.monomials(max_weight=C.order.weight((P.n, P.n))) if not any(l.divides(m) for l in G.leading)]
    assert len(std) == P.n


SEMI = [CASES[k] for k in (0, 1, 2, 4)]


@pytest.mark.parametrize("name,C,P", SEMI, ids=[c[0] for c in SEMI])
def test_maximal_semigrid_shape(name, C, P):
    G = vanishing_gb(P, C.order)
    prod = B(C.field, [(0, 0, 1)])
    for x in P.x_support:
        prod = prod * B(C.field, [(1, 0, 1), (0, 0, C.field.neg(x))])
    assert G[0] == prod
    assert G.leading[1] == Monomial(0, C.order.a)
    assert G.t == 2


@pytest.mark.parametrize("name,C,P", CASES, ids=[c[0] for c in CASES])
def test_bhat_matches_rank_oracle(name, C, P):
    O = oracle_for(C.field)
    o = C.order
    for m in sorted({0, P.n // 2, P.n - 1, P.n, P.n + 2 * C.genus - 1}):
        got = compute_Bhat(P, o, m)
        rows, want = [], []
        for mono in o.monomials(max_weight=m, max_j=o.a - 1):
            vec = [O.mul(O.pow(x, mono.i), O.pow(y, mono.j)) for x, y in P]
            if rank(O, rows + [vec]) > len(rows):
                rows.append(vec)
                want.append(mono)
        assert got == want


def test_reduce_against_textbook_division():
    C, P = hermitian(3)
    F, O = C.field, oracle_for(C.field)
    rng = random.Random(11)
    for P_ in (P, P.take(sorted(rng.sample(range(P.n), 10)))):
        G = vanishing_gb(P_, C.order)
        for _ in range(10):
            f = BiPoly(F, [[rng.randrange(F.q) for _ in range(P_.n_x)] for _ in range(C.a)])
            r = reduce(f, G)
            assert as_dict(r) == division_remainder(O, as_dict(f), map(as_dict, G), C.order.key)
            assert r == divide(f, G.elements, C.order)
            assert set(bivariate_mpe(f - r, P_).values()) <= {0}
            assert not any(lm.divides(m) for m in r.support() for lm in G.leading)


def test_buchberger_reference():
    C, P = hermitian(2)
    G = vanishing_gb(P, C.order)
    by_lm = sorted(zip(G.leading, G.elements), key=lambda t: C.order.key(t[0]))
    assert buchberger(list(G.elements), C.order) == [g for _, g in by_lm]
    F = C.field
    assert buchberger([B(F, [(0, 0, 3)])], C.order) == [B(F, [(0, 0, 1)])]


def test_empty_point_set_rejected():
    with pytest.raises(ValueError):
        vanishing_gb(PointSet(GF(4), []), WeightedOrder(2, 3))


@given(st.data())
def test_random_subsets_reduce_correctly(data):
    C, P = hermitian(3)
    F = C.field
    idx = sorted(data.draw(st.sets(st.integers(0, P.n - 1), min_size=1, max_size=P.n)))
    Q = P.take(idx)
    G = vanishing_gb(Q, C.order)
    rng = random.Random(data.draw(st.integers(0, 2**32)))
    f = BiPoly(F, [[rng.randrange(F.q) for _ in range(Q.n_x)] for _ in range(C.a)])
    r = reduce(f, G)
    assert set(bivariate_mpe(f - r, Q).values()) <= {0}
    assert not any(lm.divides(m) for m in r.support() for lm in G.leading)
    st_ = {}
    reduce(f, G, stats=st_)
    if G.g1_y_free:
        assert st_["max_deg_y"] < 2 * C.a and st_["max_deg_x"] < 2 * Q.n_x


def test_degree_bounds_hold_on_semigrids():
    for name, C, P in SEMI:
        G = vanishing_gb(P, C.order)
        assert G.g1_y_free, name
        rng = random.Random(3)
        for _ in range(10):
            f = BiPoly(C.field, [[rng.randrange(C.field.q) for _ in range(P.n_x)] for _ in range(C.a)])
            st_ = {}
            reduce(f, G, stats=st_)
            assert st_["max_deg_y"] < 2 * C.a and st_["max_deg_x"] < 2 * P.n_x


def test_deg_y_can_reach_2a_when_g1_has_y_terms():
    # regression: a point subset whose G1 leading monomial X^4 is a proper
    # divisor of X^n_x, so G1 carries Y^2 terms
    C, P = hermitian(3)
    Q = P.take([0, 1, 3, 6, 9, 12, 15, 18, 22])
    G = vanishing_gb(Q, C.order)
    assert (G.n_x, G.elements[0].deg_y, G.leading[0]) == (8, 2, Monomial(4, 0))
    assert not G.g1_y_free
    F, O = C.field, oracle_for(C.field)
    rng = random.Random(0)
    worst = 0
    for _ in range(200):
        f = BiPoly(F, [[rng.randrange(F.q) for _ in range(Q.n_x)] for _ in range(C.a)])
        st_ = {}
        r = reduce(f, G, stats=st_)
        worst = max(worst, st_["max_deg_y"])
        assert as_dict(r) == division_remainder(O, as_dict(f), map(as_dict, G), C.order.key)
    assert worst >= 2 * C.a
