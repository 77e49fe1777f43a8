import pytest
from gmpy2 import mpq, mpz

import cfsums.recurrence as rec
from cfsums import (
    GENERATE_CAP,
    PolyF,
    RejectedPoly,
    SeqTable,
    SingularityReport,
    generate,
    generate_general,
    growth_metrics,
    make_poly,
)
from cfsums.recurrence import eval_g, eval_poly

X11 = [1, 1, 2, 12, 936, 68408496, 342022190843338960032]
Y11 = [1, 2, 6, 78, 73086, 4999703411742]

# short reference tables for the rest of the polynomial matrix,
# recomputed independently with Fraction arithmetic before freezing
X12 = [1, 1, 3, 63, 168021, 150584903168301]
X101 = [1, 1, 2, 20, 80200, 2068556928401602000]
X111 = [1, 1, 3, 117, 63001341, 134652158504237974615172605539]
X1101 = [1, 1, 3, 279, 563514844293]


def test_make_poly_accepts_matrix():
    f = make_poly([1, 1])
    assert f.coeffs == (1, 1) and f.d == 1 and f.c == 1 and f.g_coeffs == (1,)
    f2 = make_poly((1, 0, 1))
    assert f2.d == 2 and f2.c == 1 and f2.g_coeffs == (0, 1)
    f3 = make_poly([1, 2])
    assert f3.c == 2


def test_make_poly_rejections():
    for bad in ([], [1], [0, 1], [2, 1], [1, -1], [1, 1, 0], [1, 0]):
        with pytest.raises(RejectedPoly):
            make_poly(bad)


def test_eval_poly_and_g():
    f = make_poly([1, 1, 0, 1])
    assert eval_poly(f, 3) == 1 + 3 + 27
    assert eval_g(f, 3) == 1 + 9
    # F(x) = 1 + x*G(x) must hold identically
    for x in range(0, 20):
        assert eval_poly(f, x) == 1 + x * eval_g(f, x)


def test_generate_reference_tables():
    assert generate(make_poly([1, 1]), 6).xs == X11
    assert generate(make_poly([1, 2]), 5).xs == X12
    assert generate(make_poly([1, 0, 1]), 5).xs == X101
    assert generate(make_poly([1, 1, 1]), 5).xs == X111
    assert generate(make_poly([1, 1, 0, 1]), 4).xs == X1101


def test_generate_ratio_structure(tables):
    for t in tables.values():
        for i in range(t.n_max):
            assert t.xs[i + 1] == t.xs[i] * t.ys[i]
        for i in range(t.n_max - 1):
            assert t.ys[i + 1] == t.ys[i] * t.zs[i]
            assert t.zs[i] == eval_poly(t.f, t.xs[i + 1])
        # defining recurrence, checked directly
        for n in range(t.n_max - 1):
            assert t.xs[n + 2] * t.xs[n] == t.xs[n + 1] ** 2 * eval_poly(t.f, t.xs[n + 1])


def test_generate_y_table(tables):
    assert tables[(1, 1)].ys[:6] == Y11


def test_generate_input_guards():
    f = make_poly([1, 1])
    with pytest.raises(TypeError):
        generate([1, 1], 5)
    with pytest.raises(ValueError):
        generate(f, 0)


def test_generate_cap(monkeypatch):
    f = make_poly([1, 1])
    monkeypatch.setattr(rec, "GENERATE_CAP", 5)
    with pytest.raises(ValueError, match="allow_big"):
        rec.generate(f, 6)
    t = rec.generate(f, 6, allow_big=True)
    assert t.xs == X11
    assert GENERATE_CAP == 20


def test_truncate_shares_terms(t11):
    t = t11.truncate(4)
    assert t.n_max == 4
    assert t.xs == X11[:5] and t.ys == Y11[:4] and len(t.zs) == 3
    assert t.xs[4] is t11.xs[4]
    with pytest.raises(ValueError):
        t11.truncate(t11.n_max + 1)


def test_to_json_uses_strings(t11):
    d = t11.truncate(6).to_json()
    assert d["F"] == [1, 1]
    assert d["xs"][-1] == "342022190843338960032"
    assert all(isinstance(s, str) for s in d["xs"] + d["ys"] + d["zs"])


def test_generate_general_matches_generate():
    t = generate_general([1, 1], 1, 1, 8)
    ref = generate(make_poly([1, 1]), 8)
    assert isinstance(t, SeqTable)
    assert [mpz(v) for v in t.xs] == ref.xs
    assert t.ys == ref.ys


def test_generate_general_rational_orbit():
    t = generate_general([1, 1], mpq(1, 2), 1, 4)
    assert isinstance(t, SeqTable)
    # x_2 = x_1^2*F(x_1)/x_0 = 1*2/(1/2) = 4
    assert t.xs[2] == 4
    for n in range(len(t.xs) - 2):
        fv = sum(mpq(c) * t.xs[n + 1] ** i for i, c in enumerate([1, 1]))
        assert t.xs[n + 2] * t.xs[n] == t.xs[n + 1] ** 2 * fv


def test_generate_general_singularity_detection():
    # F(x) = x - 1 vanishes immediately at x_1 = 1
    rep = generate_general([-1, 1], 1, 1, 6)
    assert isinstance(rep, SingularityReport)
    assert rep.m == 1
    assert rep.xs[-1] == 0

    # F(x) = x + 8 with seeds -5, 2: x_2 = 4*10/(-5) = -8 hits the root
    rep2 = generate_general([8, 1], -5, 2, 6)
    assert isinstance(rep2, SingularityReport)
    assert rep2.m == 2
    assert rep2.xs[2] == -8 and rep2.xs[-1] == 0

    # detector must NOT fire when no F(x_m) = 0 occurs; F(x) = x - 2
    # from unit seeds wanders through negatives without touching 2
    t = generate_general([-2, 1], 1, 1, 5)
    assert isinstance(t, SeqTable)
    assert all(v != 0 for v in t.xs)
    assert all(v != 2 for v in t.xs[1:])


def test_generate_general_guards():
    with pytest.raises(ValueError):
        generate_general([], 1, 1, 4)
    with pytest.raises(ValueError):
        generate_general([1, 1], 0, 1, 4)
    with pytest.raises(ValueError):
        generate_general([1, 1], 1, 1, 0)


def test_growth_metrics_rows(t11):
    rows = growth_metrics(t11.truncate(8))
    assert [n for n, _, _ in rows] == [2, 3, 4, 5, 6, 7]
    # log x_5 / log x_4 = 18.0410.../6.8416... ~ 2.6369, tending to lambda
    n4 = [r for r in rows if r[0] == 4][0]
    assert n4[1].to_decimal(4) == "2.6369"
    assert all(ok for _, _, ok in rows)


def test_growth_metrics_needs_terms():
    t = generate(make_poly([1, 1]), 2)
    with pytest.raises(ValueError):
        growth_metrics(t)


def test_polyf_frozen():
    f = make_poly([1, 1])
    with pytest.raises(AttributeError):
        f.d = 3
