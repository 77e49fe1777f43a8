"""Admissible polynomials and sequence generation for the recurrence
x(n+2)*x(n) = x(n+1)^2 * F(x(n+1)) with x(0) = x(1) = 1.

Every division the theory promises to be exact is checked at run time,
release builds included; a nonzero remainder aborts instead of letting a
wrong table propagate.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq, mpz

from .fixedpoint import log_bigint

# x_20 already has about a million digits for F(x) = x + 1
GENERATE_CAP = 20


class RejectedPoly(ValueError):
    """Coefficients violate the admissibility hypotheses."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class SingularityHit(ArithmeticError):
    """A zero term would be produced (F vanished along the orbit)."""

    def __init__(self, m: int):
        super().__init__(f"x_{m} would be zero")
        self.m = m


class InexactDivision(ArithmeticError):
    """An exactness check failed; the table cannot be trusted."""

    def __init__(self, n: int):
        super().__init__(f"nonzero remainder at index {n}")
        self.n = n


@dataclass(frozen=True)
class PolyF:
    """F(x) = coeffs[0] + coeffs[1]*x + ... + coeffs[d]*x^d.

    g_coeffs are the coefficients of G with F(x) = 1 + x*G(x); they are
    exactly coeffs[1:].
    """

    coeffs: tuple
    d: int
    c: int
    g_coeffs: tuple


def make_poly(coeffs) -> PolyF:
    """Validate coefficients (constant first) and build a PolyF.

    Admissibility: constant term 1, degree >= 1, all coefficients >= 0,
    positive leading coefficient.
    """
    cs = [int(v) for v in coeffs]
    if not cs or cs[0] != 1:
        raise RejectedPoly("constant term must be 1")
    if any(v < 0 for v in cs):
        raise RejectedPoly("coefficients must be nonnegative")
    if len(cs) < 2 or cs[-1] < 1:
        raise RejectedPoly("degree must be >= 1 with a positive leading coefficient")
    return PolyF(tuple(cs), len(cs) - 1, cs[-1], tuple(cs[1:]))


def _horner(coeffs, x):
    acc = mpz(0)
    for v in reversed(coeffs):
        acc = acc * x + v
    return acc


def eval_poly(f: PolyF, x):
    """F(x) by Horner evaluation; exact."""
    return _horner(f.coeffs, mpz(x))


def eval_g(f: PolyF, x):
    """G(x) where F(x) = 1 + x*G(x); exact."""
    return _horner(f.g_coeffs, mpz(x))


@dataclass
class SeqTable:
    """Generated sequences: xs = x_0..x_N, ys = y_0..y_{N-1},
    zs = z_0..z_{N-2} with y_n = x_{n+1}/x_n and z_n = y_{n+1}/y_n."""

    f: object
    xs: list
    ys: list
    zs: list

    @property
    def n_max(self) -> int:
        return len(self.xs) - 1

    def truncate(self, n: int) -> "SeqTable":
        """View of the first n+1 terms (shares the big integers)."""
        if n > self.n_max:
            raise ValueError(f"table only extends to x_{self.n_max}")
        return SeqTable(self.f, self.xs[: n + 1], self.ys[:n], self.zs[: max(0, n - 1)])

    def _f_coeffs(self):
        return list(self.f.coeffs) if isinstance(self.f, PolyF) else list(self.f)

    def to_json(self) -> dict:
        # big terms as decimal strings; they overflow native JSON numbers
        return {
            "F": [int(v) for v in self._f_coeffs()],
            "xs": [str(v) for v in self.xs],
            "ys": [str(v) for v in self.ys],
            "zs": [str(v) for v in self.zs],
        }


@dataclass
class SingularityReport:
    """Diagnostic result: F(x_m) = 0 forces x_{m+1} = x_{m+2} = 0 and an
    undefined x_{m+3}. The orbit list runs through the forced zero."""

    m: int
    xs: list


def generate(f: PolyF, n: int, allow_big: bool = False) -> SeqTable:
    """Generate x_0..x_n from x_0 = x_1 = 1 with exact-division checks.

    Raises SingularityHit if a zero term would be produced (impossible
    for admissible F, which is positive on positive arguments) and
    InexactDivision if any promised-exact ratio leaves a remainder.
    """
    if not isinstance(f, PolyF):
        raise TypeError("generate expects a PolyF from make_poly")
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > GENERATE_CAP and not allow_big:
        raise ValueError(
            f"n={n} exceeds the default cap of {GENERATE_CAP}; override with allow_big"
        )
    one = mpz(1)
    xs = [one, one]
    zs_direct = []
    while len(xs) < n + 1:
        z = eval_poly(f, xs[-1])
        if z == 0:
            raise SingularityHit(len(xs))
        nxt, rem = divmod(xs[-1] * xs[-1] * z, xs[-2])
        if rem:
            raise InexactDivision(len(xs))
        xs.append(nxt)
        zs_direct.append(z)
    ys = []
    for i in range(len(xs) - 1):
        y, rem = divmod(xs[i + 1], xs[i])
        if rem:
            raise InexactDivision(i)
        ys.append(y)
    zs = []
    for i in range(len(ys) - 1):
        z, rem = divmod(ys[i + 1], ys[i])
        if rem:
            raise InexactDivision(i)
        # ratio route must agree with direct evaluation of F
        if z != zs_direct[i]:
            raise AssertionError(f"z_{i} disagrees between ratio and F evaluation")
        zs.append(z)
    return SeqTable(f, xs, ys, zs)


def generate_general(coeffs, x0, x1, n: int):
    """Iterate the recurrence for an arbitrary integer polynomial and
    arbitrary nonzero seeds, over exact rationals.

    Returns a SeqTable (no integrality or positivity promises) or a
    SingularityReport identifying the index m with F(x_m) = 0.
    """
    cs = [int(v) for v in coeffs]
    if not cs:
        raise ValueError("empty coefficient list")
    if x0 == 0 or x1 == 0:
        raise ValueError("seeds must be nonzero")
    if n < 1:
        raise ValueError("n must be >= 1")

    def fval(x):
        acc = mpq(0)
        for v in reversed(cs):
            acc = acc * x + v
        return acc

    xs = [mpq(x0), mpq(x1)]
    while len(xs) < n + 1:
        z = fval(xs[-1])
        if z == 0:
            return SingularityReport(len(xs) - 1, xs + [mpq(0)])
        xs.append(xs[-1] * xs[-1] * z / xs[-2])
    ys = [xs[i + 1] / xs[i] for i in range(len(xs) - 1)]
    zs = [fval(xs[i + 1]) for i in range(len(xs) - 2)]
    if all(v.denominator == 1 for v in xs):
        xs = [mpz(v) for v in xs]
    return SeqTable(tuple(cs), xs, ys, zs)


def growth_metrics(t: SeqTable, prec: int = 128):
    """Rows (n, log x_{n+1} / log x_n, exact x_{n+1}^2 > x_n^5) for n >= 2.

    The inequality is the squared form of x_{n+1} > x_n^(5/2), checked in
    exact integer arithmetic; the log ratio is fixed-point only for
    reporting.
    """
    if t.n_max < 3:
        raise ValueError("need at least 4 terms")
    rows = []
    for n in range(2, t.n_max):
        num = t.xs[n + 1]
        den = t.xs[n]
        ratio = log_bigint(num, prec) / log_bigint(den, prec)
        ok = num * num > den ** 5
        rows.append((n, ratio, bool(ok)))
    return rows


__all__ = [
    "GENERATE_CAP",
    "InexactDivision",
    "PolyF",
    "RejectedPoly",
    "SeqTable",
    "SingularityHit",
    "SingularityReport",
    "eval_g",
    "eval_poly",
    "generate",
    "generate_general",
    "growth_metrics",
    "make_poly",
]
