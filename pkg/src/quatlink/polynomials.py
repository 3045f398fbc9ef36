"""Polynomials with quaternion or real coefficients in a central variable t.

The variable commutes with all coefficients, so multiplication is an ordinary
convolution with noncommutative coefficient products.  Real-root extraction is
capped at degree 4: that covers the norm polynomial of a quadratic and every
divisor of it.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from . import scalars
from .algebra import Quaternion, Signature
from .errors import (
    ExactnessWarning,
    MismatchError,
    NonGenericError,
    NonInvertibleError,
    UnsupportedError,
)
from .scalars import SqrtExt, as_scalar, exact_sqrt, scalar_eq


def _trim(coeffs, zero_test):
    coeffs = list(coeffs)
    while coeffs and zero_test(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class RealPoly:
    """Dense real polynomial; ``coeffs[d]`` is the coefficient of ``t**d``."""

    coeffs: tuple = ()

    def __post_init__(self):
        cleaned = _trim((as_scalar(c) for c in self.coeffs), lambda c: c == 0)
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def from_roots(cls, roots) -> "RealPoly":
        poly = cls((1,))
        for r in roots:
            poly = poly * cls((-r, 1))
        return poly

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def backend(self) -> str:
        return "exact" if all(scalars.is_exact(c) for c in self.coeffs) else "float"

    def coefficient(self, d: int):
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        if not isinstance(other, RealPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RealPoly(tuple(self.coefficient(d) + other.coefficient(d) for d in range(n)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RealPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, float, SqrtExt)):
            return RealPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, RealPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return RealPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return RealPoly(tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RealPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return all(scalar_eq(self.coefficient(d), other.coefficient(d)) for d in range(n))

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "RealPoly":
        return RealPoly(tuple(d * c for d, c in enumerate(self.coeffs) if d > 0))

    def monic(self) -> "RealPoly":
        if not self.coeffs:
            raise ValueError("zero polynomial has no monic form")
        lead = self.coeffs[-1]
        return RealPoly(tuple(c / lead for c in self.coeffs))

    def is_monic(self, tol: float | None = None) -> bool:
        return bool(self.coeffs) and scalar_eq(self.coeffs[-1], 1, tol)

    def divmod(self, other: "RealPoly") -> tuple["RealPoly", "RealPoly"]:
        """Euclidean division (exact scalar arithmetic expected)."""
        if other.degree < 0:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        lead = other.coeffs[-1]
        while len(rem) >= len(other.coeffs) and rem:
            factor = rem[-1] / lead
            shift = len(rem) - len(other.coeffs)
            quot[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * c
            while rem and scalars.is_exact(rem[-1]) and rem[-1] == 0:
                rem.pop()
            if rem and not scalars.is_exact(rem[-1]):
                raise MismatchError("exact division requested on float polynomial")
        return RealPoly(tuple(quot)), RealPoly(tuple(rem))

    def gcd(self, other: "RealPoly") -> "RealPoly":
        a, b = self, other
        while b.degree >= 0:
            a, b = b, a.divmod(b)[1]
        if a.degree < 0:
            return a
        return a.monic()

    def is_squarefree(self) -> bool:
        if self.degree <= 1:
            return True
        return self.gcd(self.derivative()).degree == 0

    def to_float(self) -> "RealPoly":
        return RealPoly(tuple(scalars.to_float(c) for c in self.coeffs))

    def __str__(self):
        from .textio import real_poly_str

        return real_poly_str(self)


@dataclass(frozen=True)
class QuatPoly:
    """Dense polynomial with quaternion coefficients, ascending degree order."""

    coeffs: tuple
    signature: Signature = field(init=False)

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("QuatPoly needs at least one coefficient")
        for c in coeffs:
            if not isinstance(c, Quaternion):
                raise MismatchError(f"not a quaternion coefficient: {c!r}")
        sig = coeffs[0].signature
        for c in coeffs:
            if c.signature is not sig:
                raise MismatchError("mixed signatures in one polynomial")
        trimmed = _trim(coeffs, lambda c: all(x == 0 for x in c.coords))
        if not trimmed:
            trimmed = (Quaternion.zero(sig),)
        object.__setattr__(self, "coeffs", trimmed)
        object.__setattr__(self, "signature", sig)

    @classmethod
    def from_real(cls, poly: RealPoly, signature: Signature) -> "QuatPoly":
        coeffs = poly.coeffs or (Fraction(0),)
        return cls(tuple(Quaternion.real(c, signature) for c in coeffs))

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0].is_zero():
            return -1
        return len(self.coeffs) - 1

    @property
    def backend(self) -> str:
        return "exact" if all(c.backend == "exact" for c in self.coeffs) else "float"

    def coefficient(self, d: int) -> Quaternion:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return Quaternion.zero(self.signature)

    @property
    def leading(self) -> Quaternion:
        return self.coeffs[-1]

    def is_monic(self, tol: float | None = None) -> bool:
        lead = self.leading
        one = Quaternion.real(1, self.signature)
        return lead.approx_eq(one, tol) if lead.backend == "float" else lead == one

    def __add__(self, other):
        if not isinstance(other, QuatPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return QuatPoly(tuple(self.coefficient(d) + other.coefficient(d) for d in range(n)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QuatPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, float, SqrtExt)):
            return QuatPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, QuatPoly):
            return NotImplemented
        out = [Quaternion.zero(self.signature) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return QuatPoly(tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QuatPoly):
            return NotImplemented
        if self.signature is not other.signature:
            return False
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.coefficient(d) == other.coefficient(d) for d in range(n))

    def __hash__(self):
        return hash((self.coeffs, self.signature))

    def conjugate(self) -> "QuatPoly":
        return QuatPoly(tuple(c.conjugate() for c in self.coeffs))

    def __call__(self, t) -> Quaternion:
        """Horner evaluation at a real parameter (t is central)."""
        t = scalars.as_scalar(t)
        poly = self
        if isinstance(t, float) and self.backend == "exact":
            poly = self.to_float()
        acc = Quaternion.zero(poly.signature)
        for c in reversed(poly.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "QuatPoly":
        if len(self.coeffs) == 1:
            return QuatPoly((Quaternion.zero(self.signature),))
        return QuatPoly(tuple(c * d for d, c in enumerate(self.coeffs) if d > 0))

    def norm_polynomial(self, tol: float | None = None) -> RealPoly:
        """The real polynomial ``P * conjugate(P)``."""
        product = self * self.conjugate()
        real_coefficients(product, tol, "norm polynomial")
        return RealPoly(tuple(c.w for c in product.coeffs))

    def to_float(self) -> "QuatPoly":
        return QuatPoly(tuple(c.to_float() for c in self.coeffs))

    def __str__(self):
        from .textio import quat_poly_str

        return quat_poly_str(self)


def real_coefficients(poly: QuatPoly, tol: float | None, what: str) -> None:
    """Assert every coefficient is real; float noise is judged against the
    largest real part, not in absolute terms."""
    if poly.backend == "exact":
        for c in poly.coeffs:
            if not (c.x == 0 and c.y == 0 and c.z == 0):
                raise AssertionError(f"{what} has a nonreal coefficient ({c}); arithmetic bug")
        return
    gate = (tol if tol is not None else scalars.DEFAULT_TOLERANCE) * max(
        1.0, *(abs(scalars.to_float(c.w)) for c in poly.coeffs)
    )
    for c in poly.coeffs:
        if max(abs(scalars.to_float(v)) for v in (c.x, c.y, c.z)) > gate:
            raise AssertionError(f"{what} has a nonreal coefficient ({c}); arithmetic bug")


def monic_linear(h: Quaternion) -> QuatPoly:
    """The polynomial ``t - h``."""
    one = Quaternion.real(1 if h.backend == "exact" else 1.0, h.signature)
    return QuatPoly((-h, one))


def norm_quadratic(h: Quaternion) -> RealPoly:
    """The real quadratic ``(t - h)(t - conjugate(h))``."""
    return RealPoly((h.norm(), -(h.w + h.w), Fraction(1) if scalars.is_exact(h.w) else 1.0))


def linear_zero(poly: QuatPoly, tol: float | None = None) -> Quaternion:
    """The unique h with ``r1*h + r0 = 0`` for a linear polynomial ``r1*t + r0``.

    Raises NonGenericError when the leading coefficient is not invertible and
    UnsupportedError when the polynomial is not linear.
    """
    if poly.degree != 1:
        raise UnsupportedError(f"expected a linear polynomial, got degree {poly.degree}")
    r0, r1 = poly.coeffs[0], poly.coeffs[1]
    try:
        r1_inv = r1.inverse(tol)
    except NonInvertibleError as exc:
        raise NonGenericError(f"leading coefficient {r1} is not invertible") from exc
    return -(r1_inv * r0)


@dataclass(frozen=True)
class RealRootResult:
    """Real roots (ascending, with multiplicity) plus leftover irreducible factors.

    ``quadratic_factors`` holds the monic real quadratic factors without real
    roots.  ``exact`` is False when the computation fell back to floating point.
    """

    roots: tuple
    quadratic_factors: tuple[RealPoly, ...]
    exact: bool


def _int_coeffs(poly: RealPoly) -> list[int]:
    from math import gcd, lcm

    denom = lcm(*(c.denominator for c in poly.coeffs)) if poly.coeffs else 1
    ints = [int(c * denom) for c in poly.coeffs]
    content = 0
    for v in ints:
        content = gcd(content, v)
    if content > 1:
        ints = [v // content for v in ints]
    return ints


def _factor_over_rationals(poly: RealPoly) -> list[tuple[RealPoly, int]]:
    """Irreducible factorization over the rationals via sympy, monic factors."""
    import sympy

    t = sympy.Symbol("t")
    ints = _int_coeffs(poly)
    expr = sympy.Poly(list(reversed(ints)), t, domain="QQ")
    _, factors = expr.factor_list()
    out = []
    for fac, mult in factors:
        coeffs = [Fraction(c.p, c.q) for c in reversed(fac.all_coeffs())]
        out.append((RealPoly(tuple(coeffs)).monic(), int(mult)))
    out.sort(key=lambda fm: (fm[0].degree, tuple(map(float, fm[0].coeffs))))
    return out


def _float_roots(poly: RealPoly, tol: float) -> RealRootResult:
    import numpy as np

    coeffs = [scalars.to_float(c) for c in reversed(poly.coeffs)]
    raw = np.roots(coeffs)
    scale = max(1.0, max(abs(r) for r in raw)) if len(raw) else 1.0
    real_roots = []
    complex_pairs = []
    used = [False] * len(raw)
    imag_gate = max(tol, 1e-12) ** 0.5 * scale
    for idx, r in enumerate(raw):
        if used[idx]:
            continue
        if abs(r.imag) <= imag_gate:
            root = float(r.real)
            # Newton polish tightens |P(root)| well below tol
            deriv = poly.derivative()
            for _ in range(3):
                fv = scalars.to_float(poly.to_float()(root))
                dv = scalars.to_float(deriv.to_float()(root))
                if dv == 0.0:
                    break
                root -= fv / dv
            real_roots.append(root)
            used[idx] = True
        else:
            # take the conjugate pair as a real quadratic factor
            for jdx in range(idx + 1, len(raw)):
                if not used[jdx] and abs(raw[jdx] - r.conjugate()) <= 1e-6 * scale:
                    used[idx] = used[jdx] = True
                    complex_pairs.append(
                        RealPoly((float(abs(r) ** 2), float(-2 * r.real), 1.0))
                    )
                    break
            else:
                used[idx] = True  # stray numeric artifact; drop
    return RealRootResult(tuple(sorted(real_roots)), tuple(complex_pairs), exact=False)


def real_roots(poly: RealPoly, tol: float | None = None) -> RealRootResult:
    """All real roots of a polynomial of degree <= 4, with multiplicity.

    Exact backend: rational roots come out as Fractions and roots of
    irreducible quadratics as exact ``p + q*sqrt(d)`` values.  Degree >= 3
    factors that stay irreducible over the rationals force a float fallback
    (reported via ExactnessWarning).
    """
    if poly.degree > 4:
        raise UnsupportedError(f"degree {poly.degree} > 4 root extraction is unsupported")
    if poly.degree <= 0:
        return RealRootResult((), (), exact=poly.backend == "exact")
    if poly.backend == "float":
        return _float_roots(poly, tol if tol is not None else scalars.DEFAULT_TOLERANCE)
    if any(isinstance(c, SqrtExt) for c in poly.coeffs):
        # a surd polynomial proportional to a rational one becomes rational when monic
        monic = poly.monic()
        if any(isinstance(c, SqrtExt) for c in monic.coeffs):
            warnings.warn(
                "root extraction over a quadratic extension falls back to floating point",
                ExactnessWarning,
                stacklevel=2,
            )
            return _float_roots(
                poly.to_float(), tol if tol is not None else scalars.DEFAULT_TOLERANCE
            )
        poly = monic

    roots = []
    quadratics = []
    for factor, mult in _factor_over_rationals(poly):
        if factor.degree == 1:
            roots.extend([-factor.coeffs[0]] * mult)
        elif factor.degree == 2:
            c0, c1, _ = factor.coeffs
            disc = c1 * c1 - 4 * c0
            root_disc = exact_sqrt(disc)
            if root_disc is None:
                quadratics.extend([factor] * mult)
            else:
                half = Fraction(1, 2)
                roots.extend([(-c1 + root_disc) * half] * mult)
                roots.extend([(-c1 - root_disc) * half] * mult)
        else:
            warnings.warn(
                f"norm factor of degree {factor.degree} is irreducible over the rationals; "
                "falling back to floating point roots",
                ExactnessWarning,
                stacklevel=2,
            )
            return _float_roots(poly, tol if tol is not None else scalars.DEFAULT_TOLERANCE)
    roots.sort()
    return RealRootResult(tuple(roots), tuple(quadratics), exact=True)
