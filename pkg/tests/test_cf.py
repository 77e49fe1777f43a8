import random
from fractions import Fraction

import pytest
from gmpy2 import mpq

from cfsums import (
    InvalidQuotient,
    canonical_form,
    cf_equivalent,
    cf_expand,
    cf_value,
    convergents,
)


def test_expand_known_sums():
    assert cf_expand(mpq(3, 2)).a == [1, 2]
    assert cf_expand(mpq(19, 12)).a == [1, 1, 1, 2, 2]
    assert cf_expand(mpq(1483, 936)).a == [1, 1, 1, 2, 2, 6, 12]


def test_expand_edge_cases():
    assert cf_expand(7).a == [7]
    assert cf_expand(mpq(0)).a == [0]
    assert cf_expand(mpq(1, 2)).a == [0, 2]
    assert cf_expand(mpq(-3, 2)).a == [-2, 2]
    assert cf_expand((22, 7)).a == [3, 7]
    assert cf_expand(Fraction(8, 5)).a == [1, 1, 1, 2]


def test_expand_canonical_final_quotient():
    rng = random.Random(501)
    for _ in range(200):
        num = rng.randrange(-10 ** 9, 10 ** 9)
        den = rng.randrange(1, 10 ** 9)
        a = cf_expand(mpq(num, den)).a
        if len(a) > 1:
            assert a[-1] >= 2


def test_expand_rejects_float():
    with pytest.raises(TypeError):
        cf_expand(1.5)


def test_convergents_table():
    exp = convergents([1, 1, 1, 2, 2, 6, 12])
    assert exp.p == [1, 2, 3, 8, 19, 122, 1483]
    assert exp.q == [1, 1, 2, 5, 12, 77, 936]
    assert exp.value == mpq(1483, 936)
    assert exp.convergent(2) == mpq(3, 2)


def test_convergents_identities_manual():
    exp = convergents([2, 1, 1, 2, 2, 6, 12, 78, 936])
    p, q = exp.p, exp.q
    for n in range(1, len(p)):
        assert p[n] * q[n - 1] - p[n - 1] * q[n] == (-1) ** (n + 1)
    for n in range(2, len(p)):
        assert p[n] * q[n - 2] - p[n - 2] * q[n] == (-1) ** n * exp.a[n]


def test_convergents_matrix_route():
    a = [3, 7, 15, 1, 292, 1, 1, 1, 2]
    plain = convergents(a)
    dbg = convergents(a, debug_matrix=True)
    assert plain.p == dbg.p and plain.q == dbg.q


def test_convergents_interleaving_around_value():
    exp = cf_expand(mpq(103993, 33102))
    v = exp.value
    for n in range(len(exp.a)):
        c = exp.convergent(n)
        if n % 2 == 0:
            assert c <= v
        else:
            assert c >= v


def test_quotient_validation():
    with pytest.raises(ValueError):
        convergents([])
    with pytest.raises(InvalidQuotient):
        convergents([1, 0, 3])
    with pytest.raises(InvalidQuotient):
        convergents([1, -2])
    with pytest.raises(InvalidQuotient):
        convergents([1, 2.5])
    # a_0 may be any integer, including negative
    assert convergents([-2, 2]).value == mpq(-3, 2)


def test_canonical_form_tail_transform():
    assert canonical_form([1, 1, 1]) == [1, 1, 1][:1] + [2] == [1, 2]
    assert canonical_form([1, 2, 1]) == [1, 3]
    assert canonical_form([1, 2]) == [1, 2]
    assert canonical_form([5]) == [5]
    # a bare [1] has no shorter form
    assert canonical_form([1]) == [1]


def test_cf_equivalent():
    assert cf_equivalent([1, 1, 1], [1, 2])
    assert cf_equivalent([2], [1, 1])
    assert not cf_equivalent([1, 2], [1, 3])
    rng = random.Random(502)
    for _ in range(100):
        num = rng.randrange(-10 ** 6, 10 ** 6)
        den = rng.randrange(1, 10 ** 6)
        a = cf_expand(mpq(num, den)).a
        if a[-1] >= 2 and len(a) >= 1:
            b = a[:-1] + [a[-1] - 1, 1]
            assert cf_equivalent(a, b)
            assert convergents(b).value == mpq(num, den)


def test_cf_value_digits():
    v = cf_value([1, 1, 1, 2, 2, 6, 12], 128)
    assert v.to_decimal(19) == "1.5844017094017094017"


def test_cf_value_error_bound():
    rng = random.Random(503)
    for _ in range(50):
        num = rng.randrange(1, 10 ** 18)
        den = rng.randrange(1, 10 ** 18)
        a = cf_expand(mpq(num, den)).a
        prec = rng.choice([64, 128, 256])
        got = cf_value(a, prec)
        err = Fraction(num, den) - Fraction(int(got.mant), 2 ** prec)
        assert abs(err) <= Fraction(2, 2 ** prec)


def test_cf_value_min_precision():
    with pytest.raises(ValueError):
        cf_value([1, 2], 32)


def test_fuzz_expand_roundtrip_and_identities():
    rng = random.Random(20260814)
    for _ in range(300):
        bits = rng.randrange(2, 160)
        num = rng.getrandbits(bits) - (1 << (bits - 1))
        den = rng.getrandbits(bits) + 1
        val = mpq(num, den)
        exp = cf_expand(val)
        assert exp.value == val
        assert all(q >= 1 for q in exp.a[1:])
        if len(exp.a) > 1:
            assert exp.a[-1] >= 2
        assert all(exp.q[i] < exp.q[i + 1] or i == 0 for i in range(len(exp.q) - 1))
