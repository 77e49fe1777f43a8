"""Rational-approximation quality of the infinite reciprocal sum.

The even convergents of S_infinity are exactly the partial sums, so the
approximation error |S_infinity - p_{2n}/q_{2n}| is the exact tail
sum_{j>=n+2} 1/x_j. All error quantities are kept as exact rational
brackets; logs enter only at the final exponent step, so no
floating-point subtraction of nearly equal giants ever happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gmpy2 import mpq

from .asymptotics import DEFAULT_PREC, InsufficientTerms, char_root
from .fixedpoint import HighPrecReal, log_bigint
from .recurrence import PolyF, SeqTable, generate

DEFAULT_DELTA = Fraction(1, 10)
DEFAULT_HORIZON_EXTRA = 4

_INTERPRETATION = (
    "Roth's bound allows an algebraic irrational only finitely many "
    "approximations with exponent above 2; exponents persistently above "
    "2+delta are therefore evidence of transcendence. These finitely many "
    "sampled exponents verify the premises only; they do not constitute a proof."
)


def _as_delta(delta) -> Fraction:
    # floats go through their decimal string so 0.1 means exactly 1/10
    if isinstance(delta, float):
        return Fraction(str(delta))
    return Fraction(delta)


def check_delta(d: int, delta, prec: int = 96) -> Fraction:
    """Reject margins delta >= lambda - 2 - 0.05: the exponents tend to
    lambda, so such a configuration can only produce misleading failures."""
    dq = _as_delta(delta)
    if dq <= 0:
        raise ValueError("delta must be positive")
    lam = char_root(d, prec)
    limit = lam - HighPrecReal.from_ratio(41, 20, prec)
    if HighPrecReal.from_ratio(dq.numerator, dq.denominator, prec) >= limit:
        raise ValueError(
            f"delta={dq} is asymptotically unreachable for d={d}: "
            f"exponents tend to lambda ~ {lam.to_decimal(6)}, require "
            f"delta < lambda - 2 - 0.05 ~ {limit.to_decimal(6)}"
        )
    return dq


def tail_bracket(t: SeqTable, from_j: int, m: int):
    """Exact bracket of sum_{j>=from_j} 1/x_j: the lower end sums the
    terms through j = m, the upper end adds 2/x_{m+1}, valid because the
    ratios y_j stay >= 2 from index 1 on so the dropped tail is below a
    geometric series."""
    if from_j < 1:
        raise ValueError("from_j must be >= 1")
    if m < from_j:
        raise ValueError("horizon must be >= from_j")
    if t.n_max < m + 1:
        raise InsufficientTerms(f"need x_{m + 1} but table ends at x_{t.n_max}")
    if t.ys[m] < 2:
        raise ValueError("y_M >= 2 is required for the geometric tail bound")
    lo = mpq(0)
    for j in range(from_j, m + 1):
        lo += mpq(1, t.xs[j])
    hi = lo + mpq(2, t.xs[m + 1])
    return lo, hi


@dataclass
class ApproxRecord:
    """One sampled approximation: q = q_{2n} = x_{n+1}, the exact error
    bracket, and the bracketed exponent E = log(1/err)/log(q)."""

    n: int
    q: object
    err_lo: object
    err_hi: object
    e_lo: HighPrecReal
    e_hi: HighPrecReal
    roth_pass: bool
    delta: Fraction

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": str(self.q),
            "err_lo": {"num": str(self.err_lo.numerator), "den": str(self.err_lo.denominator)},
            "err_hi": {"num": str(self.err_hi.numerator), "den": str(self.err_hi.denominator)},
            "E_lo": self.e_lo.to_decimal(20),
            "E_hi": self.e_hi.to_decimal(20),
            "roth_pass": self.roth_pass,
        }

    def csv_row(self, digits: int = 12) -> list:
        return [
            self.n,
            self.e_lo.to_decimal(digits),
            self.e_hi.to_decimal(digits),
            int(self.roth_pass),
        ]


def roth_exponent(
    t: SeqTable,
    n: int,
    m: int | None = None,
    prec: int = DEFAULT_PREC,
    delta=DEFAULT_DELTA,
) -> ApproxRecord:
    """Bracket the approximation exponent of p_{2n}/q_{2n} = S_{n+1}.

    err = tail_bracket(n+2, M) with M >= n+4 so the bracket is tight
    relative to err ~ 1/x_{n+2}; E_lo comes from the upper error end and
    E_hi from the lower, via exact-integer logs at prec bits.
    """
    if m is None:
        m = n + DEFAULT_HORIZON_EXTRA
    if m < n + 4:
        raise ValueError("horizon must be at least n + 4")
    dq = check_delta(t.f.d, delta) if isinstance(t.f, PolyF) else _as_delta(delta)
    q = t.xs[n + 1]
    err_lo, err_hi = tail_bracket(t, n + 2, m)
    if not (0 < err_lo < err_hi):
        raise AssertionError("error bracket must be positive and ordered")
    logq = log_bigint(q, prec)
    e_lo = (log_bigint(err_hi.denominator, prec) - log_bigint(err_hi.numerator, prec)) / logq
    e_hi = (log_bigint(err_lo.denominator, prec) - log_bigint(err_lo.numerator, prec)) / logq
    if e_lo > e_hi:
        raise AssertionError("exponent bracket inverted")
    threshold = HighPrecReal.from_ratio(2 * dq.denominator + dq.numerator, dq.denominator, prec)
    return ApproxRecord(
        n=n,
        q=q,
        err_lo=err_lo,
        err_hi=err_hi,
        e_lo=e_lo,
        e_hi=e_hi,
        roth_pass=bool(e_lo > threshold),
        delta=dq,
    )


@dataclass
class EvidenceReport:
    """Aggregate of the exact growth check and the sampled exponents,
    with the interpretation spelled out rather than implied."""

    f: PolyF
    delta: Fraction
    growth_rows: list
    growth_onset: int | None
    records: list
    all_pass: bool
    interpretation: str

    def to_json(self) -> dict:
        return {
            "f": [int(v) for v in self.f.coeffs],
            "delta": str(self.delta),
            "growth": [{"n": n, "ok": ok} for n, ok in self.growth_rows],
            "growth_onset": self.growth_onset,
            "records": [r.to_json() for r in self.records],
            "all_pass": self.all_pass,
            "interpretation": self.interpretation,
        }


def transcendence_evidence(
    f: PolyF,
    n_range,
    delta=DEFAULT_DELTA,
    horizon_extra: int = DEFAULT_HORIZON_EXTRA,
    prec: int = DEFAULT_PREC,
    table: SeqTable | None = None,
) -> EvidenceReport:
    """Exact growth condition x_{n+1}^2 > x_n^5 plus exponent records
    over n_range (an inclusive (lo, hi) pair or an iterable of indices).

    The growth rows start at n = 1 and the first index from which the
    strict inequality holds onward is reported as the empirical onset
    instead of assuming a threshold.
    """
    if isinstance(n_range, tuple) and len(n_range) == 2:
        ns = list(range(n_range[0], n_range[1] + 1))
    else:
        ns = sorted(set(int(v) for v in n_range))
    if not ns or ns[0] < 1:
        raise ValueError("n_range must contain indices >= 1")
    dq = check_delta(f.d, delta)
    need = ns[-1] + horizon_extra + 1
    t = table if table is not None else generate(f, need, allow_big=need > 20)
    if t.n_max < need:
        raise InsufficientTerms(f"need x_{need} but table ends at x_{t.n_max}")
    growth_rows = []
    for n in range(1, ns[-1] + 2):
        growth_rows.append((n, bool(t.xs[n + 1] * t.xs[n + 1] > t.xs[n] ** 5)))
    onset = None
    for n, ok in reversed(growth_rows):
        if not ok:
            break
        onset = n
    records = [roth_exponent(t, n, n + horizon_extra, prec, dq) for n in ns]
    all_pass = all(ok for _, ok in growth_rows) and all(r.roth_pass for r in records)
    return EvidenceReport(
        f=f,
        delta=dq,
        growth_rows=growth_rows,
        growth_onset=onset,
        records=records,
        all_pass=bool(all_pass),
        interpretation=_INTERPRETATION,
    )


__all__ = [
    "ApproxRecord",
    "DEFAULT_DELTA",
    "DEFAULT_HORIZON_EXTRA",
    "EvidenceReport",
    "check_delta",
    "roth_exponent",
    "tail_bracket",
    "transcendence_evidence",
]
