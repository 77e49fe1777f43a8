"""Machine checks for the interlacing of partial-sum continued fractions.

The central claim being verified: with S_N = sum_{j=1..N} 1/x_j, the
canonical expansion of S_N equals [a_0; a_1, ..., a_{2N-2}] where
a_{2n} = x_n and a_{2n+1} = (F(x_{n+1}) - 1)/x_n, the convergent
denominators satisfy q_{2n} = x_{n+1} and q_{2n-1} = y_n - 1, and the
even convergents are exactly the partial sums. Both sides are always
recomputed independently (Euclidean expansion vs. coefficient formula);
this module is a checker, not a restatement.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq, mpz

from .cf import cf_equivalent, cf_expand, convergents
from .recurrence import InexactDivision, PolyF, SeqTable, eval_g, eval_poly, generate


class _NotApplicable:
    def __repr__(self):
        return "NotApplicable"


# singleton returned where a check is defined only for F(x) = x + 1
NOT_APPLICABLE = _NotApplicable()


class Mismatch(Exception):
    """A sub-check failed; carries the offending detail and full report."""

    def __init__(self, detail: str, report=None):
        super().__init__(detail)
        self.detail = detail
        self.report = report


def predicted_coeffs(t: SeqTable, n: int, include_x0: bool = False) -> list:
    """Coefficient list [a_0, ..., a_{2N-2}] from the formula
    a_{2n} = x_n, a_{2n+1} = (F(x_{n+1}) - 1)/x_n.

    Each odd entry is verified integral, positive, and equal to the
    independent product route y_n * G(x_{n+1}). With include_x0=True the
    sum is taken from j = 0, which adds 1 to the value and turns a_0
    into x_0 + 1 = 2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if t.n_max < n:
        raise ValueError(f"table only extends to x_{t.n_max}, need x_{n}")
    f = t.f
    a = [t.xs[0] + 1 if include_x0 else t.xs[0]]
    for k in range(n - 1):
        odd, rem = divmod(eval_poly(f, t.xs[k + 1]) - 1, t.xs[k])
        if rem:
            raise InexactDivision(k)
        if odd != t.ys[k] * eval_g(f, t.xs[k + 1]):
            raise AssertionError(f"a_{2 * k + 1} disagrees with y_k * G(x_(k+1))")
        if odd <= 0:
            raise AssertionError(f"a_{2 * k + 1} must be positive")
        a.append(odd)
        a.append(t.xs[k + 1])
    return a


def partial_sum(t: SeqTable, n: int):
    """Exact S_N = sum_{j=1..N} 1/x_j as a reduced rational."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if t.n_max < n:
        raise ValueError(f"table only extends to x_{t.n_max}, need x_{n}")
    acc = mpq(0)
    for j in range(1, n + 1):
        acc += mpq(1, t.xs[j])
    return acc


def verify_engel(t: SeqTable, n: int) -> bool:
    """Check S_N - 1 = sum_{j=1..N-1} 1/(y_1*y_2*...*y_j) with the
    products computed literally, plus y_j >= 2 for 1 <= j <= N-1."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if t.n_max < n:
        raise ValueError(f"table only extends to x_{t.n_max}, need x_{n}")
    if any(y < 2 for y in t.ys[1:n]):
        return False
    prod = mpz(1)
    acc = mpq(0)
    for j in range(1, n):
        prod = prod * t.ys[j]
        acc += mpq(1, prod)
    return partial_sum(t, n) - 1 == acc


def verify_shallit(a, f: PolyF | None = None):
    """Check the product relations a_{2n} = a_{2n-1}*a_{2n-2} (n >= 2)
    and a_{2n+1} = a_{2n-1}*(a_{2n} + 1) (n >= 1) on a coefficient list
    of the shifted sum 1 + S_infinity (a_0 = 2).

    The relations hold only for F(x) = x + 1; when a PolyF is supplied
    and is anything else the answer is NOT_APPLICABLE.
    """
    if f is not None and tuple(f.coeffs) != (1, 1):
        return NOT_APPLICABLE
    n = 2
    while 2 * n < len(a):
        if a[2 * n] != a[2 * n - 1] * a[2 * n - 2]:
            return False
        n += 1
    n = 1
    while 2 * n + 1 < len(a):
        if a[2 * n + 1] != a[2 * n - 1] * (a[2 * n] + 1):
            return False
        n += 1
    return True


@dataclass
class InterlacingReport:
    """Self-contained record of one verification run, embedding the
    exact partial sum it checked."""

    f: PolyF
    n: int
    s_n: object
    predicted_a: list
    expanded_a: list
    match: bool
    q_even_ok: list
    q_odd_ok: list
    even_sums_ok: list
    engel_ok: bool
    shallit_ok: object

    @property
    def passed(self) -> bool:
        shallit = self.shallit_ok is NOT_APPLICABLE or self.shallit_ok is True
        return bool(
            self.match
            and all(self.q_even_ok)
            and all(self.q_odd_ok)
            and all(self.even_sums_ok)
            and self.engel_ok
            and shallit
        )

    def first_failure(self) -> str | None:
        if not self.match:
            return "expanded coefficients do not match the predicted list"
        for k, ok in enumerate(self.q_even_ok):
            if not ok:
                return f"q_{2 * k} != x_{k + 1}"
        for i, ok in enumerate(self.q_odd_ok):
            if not ok:
                return f"q_{2 * (i + 1) - 1} != y_{i + 1} - 1"
        for k, ok in enumerate(self.even_sums_ok):
            if not ok:
                return f"p_{2 * k}/q_{2 * k} != S_{k + 1}"
        if not self.engel_ok:
            return "Engel identity failed"
        if self.shallit_ok is False:
            return "Shallit product relations failed"
        return None

    def to_json(self) -> dict:
        shallit = (
            "n/a" if self.shallit_ok is NOT_APPLICABLE else bool(self.shallit_ok)
        )
        return {
            "f": [int(v) for v in self.f.coeffs],
            "n": self.n,
            "partial_sum": {"num": str(self.s_n.numerator), "den": str(self.s_n.denominator)},
            "predicted": [str(v) for v in self.predicted_a],
            "expanded": [str(v) for v in self.expanded_a],
            "match": self.match,
            "q_even_ok": list(self.q_even_ok),
            "q_odd_ok": list(self.q_odd_ok),
            "even_sums_ok": list(self.even_sums_ok),
            "engel_ok": self.engel_ok,
            "shallit_ok": shallit,
            "pass": self.passed,
        }


def verify_interlacing(
    f: PolyF, n: int, table: SeqTable | None = None, raise_on_fail: bool = True
) -> InterlacingReport:
    """Full check at depth N: (a) the Euclidean expansion of the exact
    partial sum is equivalent to the predicted coefficients, (b) the
    denominator identities q_{2k} = x_{k+1} and q_{2k-1} = y_k - 1 hold
    for every index in range, (c) the even convergents equal the partial
    sums exactly. Engel and (for F = x + 1) Shallit checks ride along.

    With raise_on_fail, any failed sub-check raises Mismatch carrying
    the report; otherwise the report is returned for inspection.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    t = table if table is not None else generate(f, n)
    if t.n_max < n:
        raise ValueError(f"table only extends to x_{t.n_max}, need x_{n}")
    s = partial_sum(t, n)
    expanded = cf_expand(s)
    pred = predicted_coeffs(t, n)
    conv = convergents(pred)
    match = cf_equivalent(expanded.a, pred)
    q_even_ok = [conv.q[2 * k] == t.xs[k + 1] for k in range(n)]
    q_odd_ok = [conv.q[2 * k - 1] == t.ys[k] - 1 for k in range(1, n)]
    even_sums_ok = [
        mpq(conv.p[2 * k], conv.q[2 * k]) == partial_sum(t, k + 1) for k in range(n)
    ]
    engel_ok = verify_engel(t, n)
    if tuple(f.coeffs) == (1, 1):
        shallit_ok = verify_shallit(predicted_coeffs(t, n, include_x0=True), f)
    else:
        shallit_ok = NOT_APPLICABLE
    report = InterlacingReport(
        f=f,
        n=n,
        s_n=s,
        predicted_a=pred,
        expanded_a=expanded.a,
        match=match,
        q_even_ok=q_even_ok,
        q_odd_ok=q_odd_ok,
        even_sums_ok=even_sums_ok,
        engel_ok=engel_ok,
        shallit_ok=shallit_ok,
    )
    if raise_on_fail and not report.passed:
        raise Mismatch(report.first_failure() or "verification failed", report)
    return report


__all__ = [
    "InterlacingReport",
    "Mismatch",
    "NOT_APPLICABLE",
    "partial_sum",
    "predicted_coeffs",
    "verify_engel",
    "verify_interlacing",
    "verify_shallit",
]
