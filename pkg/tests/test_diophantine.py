from fractions import Fraction

import pytest
from gmpy2 import mpq, mpz

from cfsums import (
    HighPrecReal,
    InsufficientTerms,
    SeqTable,
    char_root,
    check_delta,
    roth_exponent,
    tail_bracket,
    transcendence_evidence,
)
from cfsums.diophantine import DEFAULT_DELTA


def test_check_delta_values():
    assert check_delta(1, 0.1) == Fraction(1, 10)
    assert check_delta(1, "1/10") == Fraction(1, 10)
    assert check_delta(1, Fraction(1, 2)) == Fraction(1, 2)
    # d = 2 admits a wider margin since lambda ~ 3.73
    assert check_delta(2, 1.5) == Fraction(3, 2)


def test_check_delta_rejects_unreachable():
    with pytest.raises(ValueError, match="unreachable"):
        check_delta(1, 0.7)
    with pytest.raises(ValueError):
        check_delta(2, 1.7)
    with pytest.raises(ValueError):
        check_delta(1, 0)
    with pytest.raises(ValueError):
        check_delta(1, -0.1)


def test_tail_bracket_exact(t11):
    lo, hi = tail_bracket(t11, 3, 7)
    want_lo = sum(mpq(1, t11.xs[j]) for j in range(3, 8))
    assert lo == want_lo
    assert hi - lo == mpq(2, t11.xs[8])
    # a much deeper partial sum must fall strictly inside the bracket
    deep = sum(mpq(1, t11.xs[j]) for j in range(3, t11.n_max + 1))
    assert lo < deep < hi


def test_tail_bracket_guards(t11):
    with pytest.raises(ValueError):
        tail_bracket(t11, 0, 5)
    with pytest.raises(ValueError):
        tail_bracket(t11, 5, 4)
    with pytest.raises(InsufficientTerms):
        tail_bracket(t11, 3, t11.n_max)
    bad = SeqTable(t11.f, list(t11.xs[:7]), [mpz(1)] * 6, list(t11.zs[:5]))
    with pytest.raises(ValueError, match="geometric"):
        tail_bracket(bad, 1, 3)


def test_roth_exponent_reference(t11):
    r3 = roth_exponent(t11, 3)
    assert r3.q == t11.xs[4]
    assert r3.e_lo.to_decimal(6) == "2.636951"
    assert r3.e_hi.to_decimal(6) == "2.636951"
    assert r3.e_lo <= r3.e_hi
    assert r3.roth_pass
    r8 = roth_exponent(t11, 8, prec=256, delta=Fraction(1, 2))
    assert r8.e_lo.to_decimal(6) == "2.618035"
    assert r8.delta == Fraction(1, 2)


def test_roth_exponent_error_is_true_tail(t11):
    r = roth_exponent(t11, 3)
    # the approximation error of p_6/q_6 against deeper partial sums is
    # exactly the tail from index 5, inside the bracket
    from cfsums import partial_sum

    approx = partial_sum(t11, 4)
    deep = partial_sum(t11, t11.n_max)
    err = deep - approx
    assert r.err_lo < err < r.err_hi


def test_roth_exponent_horizon_guard(t11):
    with pytest.raises(ValueError, match="n \\+ 4"):
        roth_exponent(t11, 3, m=6)
    r = roth_exponent(t11, 3, m=8)
    assert r.roth_pass


def test_roth_record_serialization(t11):
    r = roth_exponent(t11, 4)
    d = r.to_json()
    assert d["n"] == 4
    assert d["q"] == str(t11.xs[5])
    assert set(d["err_lo"]) == {"num", "den"}
    assert d["roth_pass"] is True
    row = r.csv_row(8)
    assert row[0] == 4 and row[3] == 1


def test_transcendence_evidence_full(t11):
    rep = transcendence_evidence(t11.f, (3, 8), delta=0.5, table=t11)
    assert rep.all_pass
    assert [r.n for r in rep.records] == [3, 4, 5, 6, 7, 8]
    assert rep.growth_onset == 1
    assert all(ok for _, ok in rep.growth_rows)
    assert "Roth" in rep.interpretation
    assert "not" in rep.interpretation  # evidence, not proof
    lam = char_root(1, 256)
    tol = HighPrecReal.from_ratio(1, 20, 256)
    assert abs(rep.records[-1].e_lo - lam) <= tol


def test_transcendence_evidence_iterable_range(t11):
    rep = transcendence_evidence(t11.f, [5, 3], table=t11)
    assert [r.n for r in rep.records] == [3, 5]
    assert rep.delta == DEFAULT_DELTA


def test_transcendence_evidence_guards(t11):
    with pytest.raises(ValueError):
        transcendence_evidence(t11.f, (0, 4), table=t11)
    with pytest.raises(InsufficientTerms):
        transcendence_evidence(t11.f, (3, 8), table=t11.truncate(8))


def test_evidence_json(t11):
    rep = transcendence_evidence(t11.f, (3, 4), table=t11)
    d = rep.to_json()
    assert d["f"] == [1, 1]
    assert d["delta"] == "1/10"
    assert d["growth_onset"] == 1
    assert d["all_pass"] is True
    assert len(d["records"]) == 2
