"""Fixed-point real arithmetic on arbitrary-precision integers.

A value is stored as ``mant * 2**-prec`` with an explicit binary
precision ``prec``. Addition and subtraction are exact; multiplication,
division and the log helpers truncate and lose at most a few ulps
(slack noted per operation). There is exactly one logarithm series in
the package (:func:`_atanh_series`); both :func:`log_bigint` and
:func:`log_ratio` are argument reductions onto it.
"""

from __future__ import annotations

from gmpy2 import mpz

_LN2_CACHE: dict[int, mpz] = {}

# extra working bits used inside the log routines before the final
# truncation back to the requested precision
_GUARD = 64


class HighPrecReal:
    """Immutable fixed-point real: value = mant * 2**-prec.

    Mixed-precision arithmetic is refused rather than silently coerced;
    use :meth:`round_to` to change precision explicitly.
    """

    __slots__ = ("mant", "prec")

    def __init__(self, mant, prec: int):
        if prec < 1:
            raise ValueError("precision must be at least 1 bit")
        self.mant = mpz(mant)
        self.prec = prec

    @classmethod
    def from_int(cls, n, prec: int) -> "HighPrecReal":
        return cls(mpz(n) << prec, prec)

    @classmethod
    def from_ratio(cls, num, den, prec: int) -> "HighPrecReal":
        """num/den on the 2**-prec grid, rounded down; error < 1 ulp."""
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        return cls((mpz(num) << prec) // den, prec)

    @classmethod
    def zero(cls, prec: int) -> "HighPrecReal":
        return cls(0, prec)

    def _match(self, other: "HighPrecReal") -> "HighPrecReal":
        if not isinstance(other, HighPrecReal):
            raise TypeError("expected a HighPrecReal operand")
        if other.prec != self.prec:
            raise ValueError(f"precision mismatch: {self.prec} vs {other.prec}")
        return other

    # exact
    def __add__(self, other):
        return HighPrecReal(self.mant + self._match(other).mant, self.prec)

    # exact
    def __sub__(self, other):
        return HighPrecReal(self.mant - self._match(other).mant, self.prec)

    # truncating, <= 1 ulp
    def __mul__(self, other):
        return HighPrecReal((self.mant * self._match(other).mant) >> self.prec, self.prec)

    # truncating, <= 1 ulp
    def __truediv__(self, other):
        return HighPrecReal((self.mant << self.prec) // self._match(other).mant, self.prec)

    def __neg__(self):
        return HighPrecReal(-self.mant, self.prec)

    def __abs__(self):
        return HighPrecReal(abs(self.mant), self.prec)

    def mul_int(self, k) -> "HighPrecReal":
        """Exact scaling by an integer."""
        return HighPrecReal(self.mant * mpz(k), self.prec)

    def div_int(self, k) -> "HighPrecReal":
        """Integer division of the mantissa; <= 1 ulp."""
        return HighPrecReal(self.mant // mpz(k), self.prec)

    def round_to(self, prec: int) -> "HighPrecReal":
        if prec >= self.prec:
            return HighPrecReal(self.mant << (prec - self.prec), prec)
        return HighPrecReal(self.mant >> (self.prec - prec), prec)

    def le_pow2(self, k: int) -> bool:
        """True iff |value| <= 2**k."""
        if self.prec + k < 0:
            return self.mant == 0
        return abs(self.mant) <= (mpz(1) << (self.prec + k))

    def __lt__(self, other):
        return self.mant < self._match(other).mant

    def __le__(self, other):
        return self.mant <= self._match(other).mant

    def __gt__(self, other):
        return self.mant > self._match(other).mant

    def __ge__(self, other):
        return self.mant >= self._match(other).mant

    def __eq__(self, other):
        if not isinstance(other, HighPrecReal):
            return NotImplemented
        return self.prec == other.prec and self.mant == other.mant

    def __hash__(self):
        return hash((self.mant, self.prec))

    def __float__(self):
        # big mantissas overflow float(mpz)/2**prec, so go through a
        # 256-bit window first
        if self.mant == 0:
            return 0.0
        shift = max(0, self.mant.bit_length() - 256)
        return float(self.mant >> shift) * 2.0 ** (shift - self.prec)

    def to_decimal(self, digits: int = 30) -> str:
        """Decimal string, truncated toward zero at `digits` places."""
        if digits < 0:
            raise ValueError("digits must be >= 0")
        sign = "-" if self.mant < 0 else ""
        scaled = (abs(self.mant) * mpz(10) ** digits) >> self.prec
        if digits == 0:
            return sign + str(scaled)
        s = str(scaled).rjust(digits + 1, "0")
        return f"{sign}{s[:-digits]}.{s[-digits:]}"

    def __repr__(self):
        return f"HighPrecReal({self.to_decimal(12)}, prec={self.prec})"


def _atanh_series(t_mant, work: int):
    """2*atanh(t) for |t| <= 1/3, t given as mant with `work` frac bits.

    Terms shrink by at least 1/9 per step, so about work/3.17 terms are
    summed; each truncates by < 1 ulp, well inside the guard bits.
    """
    neg = t_mant < 0
    t = -t_mant if neg else t_mant
    t2 = (t * t) >> work
    acc = t
    pw = t
    k = 1
    while True:
        pw = (pw * t2) >> work
        if pw == 0:
            break
        term = pw // (2 * k + 1)
        if term == 0:
            break
        acc += term
        k += 1
    acc = 2 * acc
    return -acc if neg else acc


def _ln2_mant(work: int):
    """ln 2 = 2*atanh(1/3) as a mantissa with `work` frac bits."""
    cached = _LN2_CACHE.get(work)
    if cached is None:
        cached = _atanh_series((mpz(1) << work) // 3, work)
        _LN2_CACHE[work] = cached
    return cached


def log_bigint(x, prec: int) -> HighPrecReal:
    """Natural log of a positive integer; absolute error <= 2**(4-prec).

    Argument reduction: x = m * 2**b with m in [1, 2), then
    ln x = 2*atanh((m-1)/(m+1)) + b*ln 2.
    """
    x = mpz(x)
    if x < 1:
        raise ValueError("log_bigint requires x >= 1")
    work = prec + _GUARD
    b = x.bit_length() - 1
    if b == 0:
        return HighPrecReal.zero(prec)
    m = x << (work - b) if b <= work else x >> (b - work)
    one = mpz(1) << work
    t = ((m - one) << work) // (m + one)
    r = _atanh_series(t, work) + b * _ln2_mant(work)
    return HighPrecReal(r >> _GUARD, prec)


def log_ratio(num, den, prec: int) -> HighPrecReal:
    """ln(num/den) for positive integers; absolute error <= 2**(5-prec).

    Ratios within a factor of two of 1 go straight into the atanh
    series, which preserves logs far below the difference of the two
    separate big logs (no cancellation); everything else reduces to
    log_bigint on each side.
    """
    num = mpz(num)
    den = mpz(den)
    if num < 1 or den < 1:
        raise ValueError("log_ratio requires positive integers")
    if num == den:
        return HighPrecReal.zero(prec)
    if num < 2 * den and den < 2 * num:
        work = prec + _GUARD
        t = ((num - den) << work) // (num + den)
        return HighPrecReal(_atanh_series(t, work) >> _GUARD, prec)
    return log_bigint(num, prec) - log_bigint(den, prec)
