"""Scalar tower used throughout the package.

Two backends coexist behind plain Python numbers:

* exact -- ``fractions.Fraction`` plus :class:`SqrtExt` values ``a + b*sqrt(d)``
  (``a``, ``b`` rational, ``d`` a square-free integer > 1).  All comparisons
  are exact.
* float -- ordinary ``float`` with a module-wide tolerance for equality.

``SqrtExt`` values of one radicand form a field, so quaternion and polynomial
arithmetic stays exact as long as only a single square root is involved.
Combining two different radicands raises :class:`~quatlink.errors.MixedRadicalError`;
callers fall back to floats in that case.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import MixedRadicalError

DEFAULT_TOLERANCE = 1e-9

#: Values accepted wherever a scalar is expected.
Scalar = "Fraction | SqrtExt | float"

_RATIONAL_TYPES = (int, Fraction)


def as_scalar(value):
    """Coerce ``value`` to a canonical scalar (int -> Fraction, floats validated)."""
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, SqrtExt):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite float scalar: {value!r}")
        return value
    raise TypeError(f"not a scalar: {value!r}")


def is_exact(value) -> bool:
    return isinstance(value, (*_RATIONAL_TYPES, SqrtExt))


def to_float(value) -> float:
    if isinstance(value, SqrtExt):
        return float(value)
    return float(value)


def scalar_eq(a, b, tol: float | None = None) -> bool:
    """Equality with the backend rule: exact when both sides are exact, otherwise
    ``|a - b| <= tol * max(1, |a|, |b|)`` (absolute near zero, relative for large
    magnitudes)."""
    if is_exact(a) and is_exact(b):
        return a == b
    if tol is None:
        tol = DEFAULT_TOLERANCE
    fa, fb = to_float(a), to_float(b)
    return abs(fa - fb) <= tol * max(1.0, abs(fa), abs(fb))


def is_zero(a, tol: float | None = None) -> bool:
    return scalar_eq(a, 0, tol)


def scalar_sign(a) -> int:
    if isinstance(a, SqrtExt):
        return a._sign()
    if a > 0:
        return 1
    if a < 0:
        return -1
    return 0


def _squarefree_decompose(n: int) -> tuple[int, int]:
    """Write a positive integer as s**2 * d with d square-free; returns (s, d)."""
    if n <= 0:
        raise ValueError("positive integer required")
    from sympy import factorint

    s, d = 1, 1
    for p, e in factorint(n).items():
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d


def sqrt_ext(a, b, d):
    """Build ``a + b*sqrt(d)`` in normal form; collapses to Fraction when rational."""
    a = Fraction(a)
    b = Fraction(b)
    if b == 0:
        return a
    if d <= 0:
        raise ValueError("radicand must be positive")
    num_s, num_d = _squarefree_decompose(d.numerator if isinstance(d, Fraction) else d)
    den = d.denominator if isinstance(d, Fraction) else 1
    if den != 1:
        # sqrt(p/q) = sqrt(p*q)/q
        num_s, num_d = _squarefree_decompose((d.numerator * d.denominator))
        b = b / d.denominator
    if num_d == 1:
        return a + b * num_s
    return SqrtExt(a, b * num_s, num_d)


def exact_sqrt(q):
    """Exact square root of a nonnegative rational, or None when q < 0."""
    q = Fraction(q)
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    rad = q.numerator * q.denominator
    s, d = _squarefree_decompose(rad)
    root = Fraction(s, q.denominator)
    if d == 1:
        return root
    return SqrtExt(Fraction(0), root, d)


class SqrtExt:
    """Exact element ``a + b*sqrt(d)`` of a real quadratic extension of the rationals.

    ``d`` is a square-free integer > 1 and ``b != 0``; rational results are
    returned as plain Fractions by :func:`sqrt_ext`.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Fraction, b: Fraction, d: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = int(d)

    # -- helpers ---------------------------------------------------------

    def _coerce(self, other):
        """Return (a, b) of other in self's field, or None when incompatible."""
        if isinstance(other, _RATIONAL_TYPES):
            return Fraction(other), Fraction(0)
        if isinstance(other, SqrtExt):
            if other.d != self.d:
                raise MixedRadicalError(
                    f"cannot combine sqrt({self.d}) with sqrt({other.d}) exactly"
                )
            return other.a, other.b
        return None

    def _sign(self) -> int:
        # sign of a + b*sqrt(d), exact: the radical term is irrational, never zero
        a, b = self.a, self.b
        if a >= 0 and b > 0:
            return 1
        if a <= 0 and b < 0:
            return -1
        # opposite signs: compare a^2 against b^2 d
        lhs, rhs = a * a, b * b * self.d
        if lhs == rhs:
            # |a| == |b|sqrt(d) impossible for irrational sqrt(d) unless b == 0
            raise AssertionError("non-normalized SqrtExt")
        if a > 0:  # b < 0
            return 1 if lhs > rhs else -1
        return -1 if lhs > rhs else 1

    def conjugate(self) -> "SqrtExt":
        return SqrtExt(self.a, -self.b, self.d)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        ab = self._coerce(other)
        if ab is None:
            if isinstance(other, float):
                return float(self) + other
            return NotImplemented
        return sqrt_ext(self.a + ab[0], self.b + ab[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return SqrtExt(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return self if self._sign() >= 0 else -self

    def __mul__(self, other):
        ab = self._coerce(other)
        if ab is None:
            if isinstance(other, float):
                return float(self) * other
            return NotImplemented
        oa, ob = ab
        return sqrt_ext(self.a * oa + self.b * ob * self.d, self.a * ob + self.b * oa, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        ab = self._coerce(other)
        if ab is None:
            if isinstance(other, float):
                return float(self) / other
            return NotImplemented
        oa, ob = ab
        nrm = oa * oa - ob * ob * self.d
        if nrm == 0:
            raise ZeroDivisionError("division by zero SqrtExt")
        inv_a, inv_b = oa / nrm, -ob / nrm
        return sqrt_ext(self.a * inv_a + self.b * inv_b * self.d, self.a * inv_b + self.b * inv_a, self.d)

    def __rtruediv__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            nrm = self.a * self.a - self.b * self.b * self.d
            return (Fraction(other) * self.conjugate()) * (Fraction(1) / nrm)
        if isinstance(other, float):
            return other / float(self)
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Fraction(1)
        for _ in range(exponent):
            result = self * result
        return result

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, SqrtExt):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, _RATIONAL_TYPES):
            return False  # b != 0, hence irrational
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def _cmp(self, other) -> int:
        if isinstance(other, _RATIONAL_TYPES):
            return SqrtExt(self.a - other, self.b, self.d)._sign()
        if isinstance(other, SqrtExt) and other.d == self.d:
            diff = sqrt_ext(self.a - other.a, self.b - other.b, self.d)
            if isinstance(diff, Fraction):
                return 1 if diff > 0 else (-1 if diff < 0 else 0)
            return diff._sign()
        # distinct radicands: roots are well separated in practice, compare floats
        if isinstance(other, (SqrtExt, float)):
            mine, theirs = float(self), to_float(other)
            return (mine > theirs) - (mine < theirs)
        raise TypeError(f"cannot compare SqrtExt with {other!r}")

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- conversions -----------------------------------------------------

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        return f"SqrtExt({self.a!r}, {self.b!r}, {self.d})"

    def __str__(self):
        return format_scalar(self)


def _format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(value) -> str:
    """Canonical text form: ``p/q`` for rationals, ``a+b*sqrt(d)`` for surds."""
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return _format_fraction(value)
    if isinstance(value, SqrtExt):
        radical = f"sqrt({value.d})"
        if value.b == 1:
            rad_term = radical
        elif value.b == -1:
            rad_term = f"-{radical}"
        else:
            rad_term = f"{_format_fraction(value.b)}*{radical}"
        if value.a == 0:
            return rad_term
        sign = "+" if value.b > 0 else "-"
        mag = rad_term.lstrip("-")
        return f"{_format_fraction(value.a)}{sign}{mag}"
    if isinstance(value, float):
        return repr(value)
    raise TypeError(f"not a scalar: {value!r}")


def parse_scalar(text: str):
    """Inverse of :func:`format_scalar` (used by JSON round-trip consumers)."""
    text = text.strip()
    if "sqrt" in text:
        head, _, rad = text.partition("sqrt(")
        d = int(rad.rstrip(")"))
        head = head.rstrip("*")
        # split optional rational part from the surd coefficient
        a = Fraction(0)
        coeff_text = head
        for split_at in range(len(head) - 1, 0, -1):
            if head[split_at] in "+-" and head[split_at - 1] not in "+-/*":
                a = Fraction(head[:split_at])
                coeff_text = head[split_at:]
                break
        if coeff_text in ("", "+"):
            b = Fraction(1)
        elif coeff_text == "-":
            b = Fraction(-1)
        else:
            b = Fraction(coeff_text)
        return sqrt_ext(a, b, d)
    try:
        return Fraction(text)
    except ValueError:
        return float(text)
