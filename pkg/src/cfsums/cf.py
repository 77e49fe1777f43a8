"""Canonical continued-fraction expansion and convergent tables.

Convergent construction asserts the determinant identity
p_n*q_{n-1} - p_{n-1}*q_n = (-1)^(n+1) and the second identity
p_n*q_{n-2} - p_{n-2}*q_n = (-1)^n * a_n at every index, always on.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq, mpz

from .fixedpoint import HighPrecReal


class InvalidQuotient(ValueError):
    """Partial quotient a_n < 1 for n >= 1, or not an integer."""

    def __init__(self, n: int, value=None):
        super().__init__(f"invalid partial quotient at index {n}: {value!r}")
        self.n = n


@dataclass
class CFExpansion:
    """Partial quotients with the full convergent tables p_n, q_n."""

    a: list
    p: list
    q: list

    @property
    def value(self):
        return mpq(self.p[-1], self.q[-1])

    def convergent(self, n: int):
        return mpq(self.p[n], self.q[n])

    def to_json(self) -> dict:
        return {
            "a": [str(v) for v in self.a],
            "p": [str(v) for v in self.p],
            "q": [str(v) for v in self.q],
        }


def _check_quotients(a) -> list:
    if len(a) == 0:
        raise ValueError("empty quotient list")
    out = []
    for i, v in enumerate(a):
        m = mpz(v)
        if m != v:
            raise InvalidQuotient(i, v)
        if i >= 1 and m < 1:
            raise InvalidQuotient(i, v)
        out.append(m)
    return out


def convergents(a, debug_matrix: bool = False) -> CFExpansion:
    """Build p, q via the three-term recurrence with seeds
    p_{-1} = 1, q_{-1} = 0, p_{-2} = 0, q_{-2} = 1.

    With debug_matrix=True the 2x2 matrix product route is carried along
    and compared entry by entry as a self-test of the recurrence.
    """
    quots = _check_quotients(a)
    p_prev2, p_prev = mpz(0), mpz(1)
    q_prev2, q_prev = mpz(1), mpz(0)
    ps: list = []
    qs: list = []
    mat = (mpz(1), mpz(0), mpz(0), mpz(1))
    for n, an in enumerate(quots):
        pn = an * p_prev + p_prev2
        qn = an * q_prev + q_prev2
        det = pn * q_prev - p_prev * qn
        if det != (-1 if n % 2 == 0 else 1):
            raise AssertionError(f"determinant identity failed at n={n}")
        if n >= 1:
            second = pn * q_prev2 - p_prev2 * qn
            if second != (an if n % 2 == 0 else -an):
                raise AssertionError(f"a_n identity failed at n={n}")
        if debug_matrix:
            mat = (mat[0] * an + mat[1], mat[0], mat[2] * an + mat[3], mat[2])
            if mat != (pn, p_prev, qn, q_prev):
                raise AssertionError(f"matrix route disagrees at n={n}")
        ps.append(pn)
        qs.append(qn)
        p_prev2, p_prev = p_prev, pn
        q_prev2, q_prev = q_prev, qn
    return CFExpansion(quots, ps, qs)


def _as_mpq(r):
    if isinstance(r, float):
        raise TypeError("exact rational required, not float")
    if isinstance(r, tuple):
        return mpq(*r)
    return mpq(r)


def cf_expand(r) -> CFExpansion:
    """Canonical expansion of an exact rational via the Euclidean
    algorithm: floor-based quotients, final quotient >= 2 whenever the
    list has more than one entry. The reconstruction is asserted equal
    to the input.
    """
    val = _as_mpq(r)
    num, den = mpz(val.numerator), mpz(val.denominator)
    a = []
    while True:
        quot, rem = divmod(num, den)
        a.append(quot)
        if rem == 0:
            break
        num, den = den, rem
    exp = convergents(a)
    if exp.value != val:
        raise AssertionError("expansion failed to reconstruct its input")
    return exp


def canonical_form(a) -> list:
    """Normalize the tail transform [..., m] <-> [..., m-1, 1] to the
    canonical representative (final quotient >= 2, or a single entry)."""
    out = list(_check_quotients(a))
    if len(out) > 1 and out[-1] == 1:
        out = out[:-1]
        out[-1] = out[-1] + 1
    return out


def cf_equivalent(a, b) -> bool:
    """True iff the two quotient lists denote the same rational."""
    return canonical_form(a) == canonical_form(b)


def cf_value(a, prec: int = 128) -> HighPrecReal:
    """Value of a finite continued fraction to prec bits.

    Computed from the exact final convergent, then rounded once; the
    error is below 2**(1-prec).
    """
    if prec < 64:
        raise ValueError("prec must be >= 64")
    exp = convergents(a)
    return HighPrecReal.from_ratio(exp.p[-1], exp.q[-1], prec)


__all__ = [
    "CFExpansion",
    "InvalidQuotient",
    "canonical_form",
    "cf_equivalent",
    "cf_expand",
    "cf_value",
    "convergents",
]
