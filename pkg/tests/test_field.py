import pytest
from hypothesis import given
from hypothesis import strategies as st

from cabcodes import GF, FieldElement, enumerate_field
from cabcodes.field import CONWAY, FieldSpec, prime_power
from oracles import oracle_for

QS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 64, 256]


def test_gf4_table():
    F = GF(4)
    assert F.modulus == (1, 1, 1)
    w = F(2)
    assert int(w + w) == 0
    assert int(w + 1) == 3
    assert int(w * w) == 3  # w^2 = w + 1
    assert int(w.inv()) == 3
    assert w * w.inv() == F(1)


def test_prime_field_examples():
    F = GF(5)
    assert int(F(3) + F(4)) == 2
    assert int(F(2).inv()) == 3
    assert int(F(1).inv()) == 1


@pytest.mark.parametrize("q", QS)
def test_identity_and_zero(q):
    F = GF(q)
    for x in F.elements():
        assert x * F(1) == x
        assert int(F(0) * x) == 0


def test_enumerate():
    assert [int(x) for x in enumerate_field(GF(2))] == [0, 1]
    assert [int(x) for x in enumerate_field(GF(4))] == [0, 1, 2, 3]
    assert len(enumerate_field(GF(9))) == 9
    F = GF(9)
    assert (F.p, F.m) == (3, 2)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        GF(7)(0).inv()
    with pytest.raises(ZeroDivisionError):
        GF(8)(3) / GF(8)(0)


def test_builtin_moduli_are_conway():
    for q in (4, 8, 9, 16, 25, 27, 64, 256):
        p, m = prime_power(q)
        assert GF(q).modulus == CONWAY[(p, m)]


def test_bad_constructions():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 0, 1))  # X^2 + 1 = (X + 1)^2 over GF(2)
    with pytest.raises(ValueError):
        FieldSpec(3, 2, (1, 0, 2))  # not monic


def test_mixing_fields_rejected():
    with pytest.raises(TypeError):
        GF(4)(1) + GF(8)(1)


@pytest.mark.parametrize("q", QS)
def test_tables_against_sympy(q):
    F = GF(q)
    O = oracle_for(F)
    step = max(1, q // 16)
    for x in range(0, q, step):
        for y in range(q):
            assert F.mul(x, y) == O.mul(x, y)
            assert F.add(x, y) == O.add(x, y)
            assert F.sub(x, y) == O.sub(x, y)


def test_custom_modulus_against_sympy():
    F = FieldSpec(2, 4, (1, 0, 0, 1, 1))  # X^4 + X^3 + 1
    O = oracle_for(F)
    for x in range(16):
        for y in range(16):
            assert F.mul(x, y) == O.mul(x, y)


@pytest.mark.parametrize("q", [q for q in QS if q <= 64])
def test_fermat_exhaustive(q):
    F = GF(q)
    for x in range(1, q):
        assert F.pow(x, q - 1) == 1
        assert F.mul(x, F.inv(x)) == 1


@pytest.mark.parametrize("q", QS)
def test_int_roundtrip(q):
    F = GF(q)
    for v in range(q):
        assert int(F(v)) == v
        assert F(int(F(v))) == F(v)
    for c in FieldElement(F, q - 1).coeffs:
        assert 0 <= c < F.p


@given(st.sampled_from(QS), st.data())
def test_axioms(q, data):
    F = GF(q)
    el = st.integers(0, q - 1).map(F)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == F(0)
    if b:
        assert (a / b) * b == a


def test_vector_ops_match_scalar():
    import numpy as np

    for q in (8, 9, 25):
        F = GF(q)
        u = np.arange(q, dtype=np.int64)
        v = (u * 5 + 3) % q
        assert list(F.vadd(u, v)) == [F.add(x, y) for x, y in zip(u, v)]
        assert list(F.vmul(u, v)) == [F.mul(x, y) for x, y in zip(u, v)]
        assert list(F.vscale(3 % q, u)) == [F.mul(3 % q, x) for x in u]
        assert list(F.vneg(u)) == [F.neg(x) for x in u]
