"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from quatlink import QuatPoly, Quaternion, Signature, monic_linear, parse_poly

SPLIT = Signature.SPLIT
HAMILTON = Signature.HAMILTON


def sq(w=0, x=0, y=0, z=0) -> Quaternion:
    return Quaternion(w, x, y, z, SPLIT)


def hq(w=0, x=0, y=0, z=0) -> Quaternion:
    return Quaternion(w, x, y, z, HAMILTON)


# ---------------------------------------------------------------------------
# independent multiplication oracle: explicit basis tables, summed term by term

_SPLIT_TABLE = {
    # (a, b) -> (sign, c) with basis indices 0=1, 1=i, 2=j, 3=k
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (1, 0), (2, 3): (-1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (1, 1), (3, 3): (1, 0),
}

_HAMILTON_TABLE = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def oracle_multiply(a: Quaternion, b: Quaternion) -> Quaternion:
    """Brute-force product via the basis table; independent of the library path."""
    table = _SPLIT_TABLE if a.signature is SPLIT else _HAMILTON_TABLE
    out = [Fraction(0)] * 4
    for i, ca in enumerate(a.coords):
        for j, cb in enumerate(b.coords):
            sign, idx = table[(i, j)]
            out[idx] += sign * ca * cb
    return Quaternion.from_coords(out, a.signature)


def oracle_norm(h: Quaternion):
    """Norm as the scalar part of the full product h * conj(h)."""
    product = oracle_multiply(h, h.conjugate())
    assert product.x == 0 and product.y == 0 and product.z == 0
    return product.w


# ---------------------------------------------------------------------------
# reference example polynomials

SPLIT_SIX_TEXT = "t^2 - (2+j+2k)t + (1-2i+j+2k)"
HAMILTON_TWO_TEXT = "t^2 - (2+j+2k)t + (1+2i+j+2k)"


@pytest.fixture(scope="session")
def split_six() -> QuatPoly:
    """Split quadratic with six factorizations."""
    return parse_poly(SPLIT_SIX_TEXT, SPLIT)


@pytest.fixture(scope="session")
def hamilton_two() -> QuatPoly:
    """Hamiltonian quadratic with two factorizations."""
    return parse_poly(HAMILTON_TWO_TEXT, HAMILTON)


#: the six (h1, h2) pairs of the split example, in no particular order
SPLIT_SIX_FACTORS = [
    (sq(1, 0, 1, 0), sq(1, 0, 0, 2)),
    (sq(1, 0, Fraction(8, 5), Fraction(6, 5)), sq(1, 0, Fraction(-3, 5), Fraction(4, 5))),
    (
        sq(Fraction(-1, 2), Fraction(-3, 2), Fraction(-1, 2), Fraction(3, 2)),
        sq(Fraction(5, 2), Fraction(3, 2), Fraction(3, 2), Fraction(1, 2)),
    ),
    (
        sq(Fraction(5, 2), Fraction(3, 2), Fraction(-1, 2), Fraction(3, 2)),
        sq(Fraction(-1, 2), Fraction(-3, 2), Fraction(3, 2), Fraction(1, 2)),
    ),
    (
        sq(Fraction(1, 2), Fraction(1, 2), Fraction(3, 2), Fraction(1, 2)),
        sq(Fraction(3, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(3, 2)),
    ),
    (
        sq(Fraction(3, 2), Fraction(-1, 2), Fraction(3, 2), Fraction(1, 2)),
        sq(Fraction(1, 2), Fraction(1, 2), Fraction(-1, 2), Fraction(3, 2)),
    ),
]

HAMILTON_TWO_FACTORS = [
    (hq(1, 0, 1, 0), hq(1, 0, 0, 2)),
    (hq(1, 0, Fraction(8, 5), Fraction(6, 5)), hq(1, 0, Fraction(-3, 5), Fraction(4, 5))),
]


def expand_pair(h1: Quaternion, h2: Quaternion) -> QuatPoly:
    return monic_linear(h1) * monic_linear(h2)


# ---------------------------------------------------------------------------
# hypothesis strategies

small_fractions = st.builds(
    Fraction, st.integers(min_value=-6, max_value=6), st.integers(min_value=1, max_value=4)
)


def quaternions(signature: Signature):
    return st.builds(
        lambda w, x, y, z: Quaternion(w, x, y, z, signature),
        small_fractions,
        small_fractions,
        small_fractions,
        small_fractions,
    )


split_quaternions = quaternions(SPLIT)
hamilton_quaternions = quaternions(HAMILTON)
any_quaternions = st.one_of(split_quaternions, hamilton_quaternions)


def vectorial_quaternions(signature: Signature):
    return st.builds(
        lambda x, y, z: Quaternion(0, x, y, z, signature),
        small_fractions,
        small_fractions,
        small_fractions,
    )
