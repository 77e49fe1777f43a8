"""High-precision growth analysis of the generated sequences.

With Lambda_n = log x_n and d = deg F, the growth is governed by the
larger root lambda of t^2 - (d+2)t + 1 = 0. The module computes lambda
from d alone, the residuals alpha_k = log(F(x_k)/(c*x_k^d)), the
constant C with log x_n ~ C*lambda^n, and checks the exact closed
formula for Lambda_n term by term.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import isqrt, mpz

from .fixedpoint import HighPrecReal, log_bigint, log_ratio
from .recurrence import SeqTable, eval_poly

DEFAULT_PREC = 256


class InsufficientTerms(ValueError):
    """The table is too short for the requested computation."""


def char_root(d: int, prec: int = DEFAULT_PREC) -> HighPrecReal:
    """lambda = (d + 2 + sqrt(d*(d+4)))/2 to prec bits via integer
    square root; the quadratic residual is asserted below 2**(4-prec)
    and lambda > 2 is asserted."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if prec < 8:
        raise ValueError("prec must be >= 8")
    root = isqrt(mpz(d * (d + 4)) << (2 * prec))
    lam = HighPrecReal((((d + 2) << prec) + root) >> 1, prec)
    one = HighPrecReal.from_int(1, prec)
    resid = lam * lam - lam.mul_int(d + 2) + one
    if not resid.le_pow2(4 - prec):
        raise AssertionError("characteristic residual too large")
    if lam.mant <= (mpz(2) << prec):
        raise AssertionError("characteristic root must exceed 2")
    return lam


def alpha_k(t: SeqTable, k: int, prec: int = DEFAULT_PREC) -> HighPrecReal:
    """alpha_k = log(F(x_k)/(c*x_k^d)), nonnegative and O(1/x_k).

    Computed as a single ratio log: F(x_k) exceeds c*x_k^d by the lower
    terms (at least the constant 1), and the near-1 series path keeps
    the value exact to the ulp where separate big logs would cancel.
    """
    if not 1 <= k <= t.n_max:
        raise ValueError(f"k must be in 1..{t.n_max}")
    f = t.f
    xk = t.xs[k]
    num = eval_poly(f, xk)
    den = mpz(f.c) * xk ** f.d
    if num <= den:
        raise AssertionError("F(x) must exceed c*x^d for an admissible F")
    return log_ratio(num, den, prec)


@dataclass
class AsymptoticReport:
    """lambda, C, the alpha series actually used, a rigorous bound on
    the dropped tail, per-n residuals of the exact Lambda_n formula, and
    relative log errors of the x_n ~ c^(-1/d)*exp(C*lambda^n) prediction."""

    f: object
    lam: HighPrecReal
    C: HighPrecReal
    alphas: list
    truncation_k: int
    tail_bound: HighPrecReal
    exact_formula_residuals: list
    growth_predictions: list
    prec: int

    def to_json(self) -> dict:
        return {
            "f": [int(v) for v in self.f.coeffs],
            "precision_bits": self.prec,
            "lambda": self.lam.to_decimal(50),
            "C": self.C.to_decimal(40),
            "alpha": [a.to_decimal(40) for a in self.alphas],
            "truncation_k": self.truncation_k,
            "tail_bound": self.tail_bound.to_decimal(60),
            "exact_formula_residuals": [
                {"n": n, "residual": r.to_decimal(60)} for n, r in self.exact_formula_residuals
            ],
            "growth_predictions": [
                {"n": n, "rel_log_error": e.to_decimal(20)} for n, e in self.growth_predictions
            ],
        }


def estimate_C(t: SeqTable, k: int, prec: int = DEFAULT_PREC) -> AsymptoticReport:
    """C = ((1 - 1/lambda)/(lambda - 1/lambda)) * log(c)/d
          + (1/(lambda - 1/lambda)) * sum_{j>=1} lambda^-j * alpha_j,
    truncated at j = k.

    The dropped tail is bounded by lambda^-k * alpha_k * lambda/(lambda-1)
    (the alphas are checked to be nonincreasing, so the geometric
    envelope is valid) plus a 2**(8-prec) cushion for fixed-point
    rounding, keeping the bound a rigorous overestimate.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > t.n_max:
        raise InsufficientTerms(f"need alpha_1..alpha_{k} but table ends at x_{t.n_max}")
    f = t.f
    lam = char_root(f.d, prec)
    one = HighPrecReal.from_int(1, prec)
    lam_inv = one / lam
    denom = lam - lam_inv
    alphas = [alpha_k(t, j, prec) for j in range(1, k + 1)]
    for j in range(1, len(alphas)):
        if alphas[j].mant > alphas[j - 1].mant:
            raise AssertionError("alpha sequence must be nonincreasing for the tail bound")
    acc = HighPrecReal.zero(prec)
    pw = one
    for a in alphas:
        pw = pw * lam_inv
        acc = acc + pw * a
    logc_over_d = log_bigint(f.c, prec).div_int(f.d)
    c_val = ((one - lam_inv) / denom) * logc_over_d + acc / denom
    tail = (pw * alphas[-1]) * (lam / (lam - one)) + HighPrecReal(1 << 8, prec)
    predictions = []
    lam_pow = lam * lam
    for n in range(2, t.n_max + 1):
        pred = c_val * lam_pow - logc_over_d
        actual = log_bigint(t.xs[n], prec)
        predictions.append((n, abs(pred - actual) / actual))
        lam_pow = lam_pow * lam
    residuals = [(n, verify_exact_formula(t, n, prec)) for n in range(2, t.n_max + 1)]
    return AsymptoticReport(
        f=f,
        lam=lam,
        C=c_val,
        alphas=alphas,
        truncation_k=k,
        tail_bound=tail,
        exact_formula_residuals=residuals,
        growth_predictions=predictions,
        prec=prec,
    )


def _rounding_budget(n: int) -> int:
    # term magnitudes grow like lambda^n (lambda < 16 for d <= 8) and
    # each of the O(n) fixed-point operations loses O(1) ulps
    return 4 * n + 16


def verify_exact_formula(t: SeqTable, n: int, prec: int = DEFAULT_PREC) -> HighPrecReal:
    """Evaluate the closed formula

    Lambda_n = (((1 - 1/lambda)*lambda^n - (1 - lambda)*lambda^-n)
                / (lambda - 1/lambda) - 1) * log(c)/d
               + sum_{j=1..n-1} (lambda^(n-j) - lambda^(j-n))
                 / (lambda - 1/lambda) * alpha_j

    and return |formula - log x_n|. Precision is doubled until the
    accumulated-rounding budget keeps a 2**-128 comparison meaningful.
    """
    if not 2 <= n <= t.n_max:
        raise ValueError(f"n must be in 2..{t.n_max}")
    while prec - _rounding_budget(n) < 128:
        prec *= 2
    f = t.f
    lam = char_root(f.d, prec)
    one = HighPrecReal.from_int(1, prec)
    lam_inv = one / lam
    denom = lam - lam_inv
    pows = [one]
    ipows = [one]
    for _ in range(n):
        pows.append(pows[-1] * lam)
        ipows.append(ipows[-1] * lam_inv)
    logc_over_d = log_bigint(f.c, prec).div_int(f.d)
    closed = (((one - lam_inv) * pows[n] - (one - lam) * ipows[n]) / denom - one) * logc_over_d
    acc = HighPrecReal.zero(prec)
    for j in range(1, n):
        weight = (pows[n - j] - ipows[n - j]) / denom
        acc = acc + weight * alpha_k(t, j, prec)
    return abs(closed + acc - log_bigint(t.xs[n], prec))


__all__ = [
    "AsymptoticReport",
    "DEFAULT_PREC",
    "InsufficientTerms",
    "alpha_k",
    "char_root",
    "estimate_C",
    "verify_exact_formula",
]
