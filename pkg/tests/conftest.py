import pytest

from cfsums import generate, make_poly

# polynomial test matrix used across the suite: F(x) = x+1, 2x+1,
# x^2+1, x^2+x+1, x^3+x+1 as constant-first coefficient tuples
MATRIX = ((1, 1), (1, 2), (1, 0, 1), (1, 1, 1), (1, 1, 0, 1))

TABLE_DEPTH = 13


@pytest.fixture(scope="session")
def tables():
    """One deep table per matrix polynomial, generated once per run."""
    out = {}
    for coeffs in MATRIX:
        f = make_poly(coeffs)
        out[coeffs] = generate(f, TABLE_DEPTH)
    return out


@pytest.fixture(scope="session")
def t11(tables):
    return tables[(1, 1)]
