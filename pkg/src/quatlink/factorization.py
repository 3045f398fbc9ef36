"""Factorization of generic monic quadratic quaternion polynomials.

Every monic real quadratic divisor M of the norm polynomial yields one
factorization ``C = (t - h1)(t - h2)``: the remainder ``R = C - M`` is linear,
``h2`` is its unique zero and ``h1 = -c1 - h2``.  Over the split quaternions a
norm polynomial with four distinct real roots has six quadratic divisors and
hence six factorizations; otherwise (and always over the Hamiltonian
quaternions) there are exactly two.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, replace
from fractions import Fraction

from . import scalars
from .algebra import Quaternion
from .errors import (
    ExactnessWarning,
    MixedRadicalError,
    NonGenericError,
    NonInvertibleError,
    UnsupportedError,
)
from .polynomials import (
    QuatPoly,
    RealPoly,
    RealRootResult,
    linear_zero,
    monic_linear,
    norm_quadratic,
    real_roots,
)
from .scalars import is_zero, scalar_eq, to_float


@dataclass(frozen=True)
class Factorization:
    """One factorization ``C = (t - h1)(t - h2)`` together with its divisor.

    ``divisor`` is the monic real quadratic ``(t - h2)(t - conj(h2))``; ``label``
    is the pair of indices of its roots among the ascending real roots of the
    norm polynomial (1-based), when those four roots exist.
    """

    h1: Quaternion
    h2: Quaternion
    divisor: RealPoly
    label: frozenset | None = None
    exact: bool = True

    def expand(self) -> QuatPoly:
        return monic_linear(self.h1) * monic_linear(self.h2)

    def left_norm_quadratic(self) -> RealPoly:
        return norm_quadratic(self.h1)

    def linked_with(self, other: "Factorization") -> bool | None:
        if self.label is None or other.label is None:
            return None
        return bool(self.label & other.label)


@dataclass(frozen=True)
class GenericityReport:
    coefficients_independent: bool
    invertible_leading_remainders: bool
    norm_square_free: bool

    @property
    def verdict(self) -> bool:
        return (
            self.coefficients_independent
            and self.invertible_leading_remainders
            and self.norm_square_free
        )


def _rank(rows, tol: float | None) -> int:
    """Rank of a small matrix of scalars by Gaussian elimination."""
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = None
        for r in range(rank, len(rows)):
            if not is_zero(rows[r][col], tol):
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if not is_zero(rows[r][col], tol):
                factor = rows[r][col] / lead
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _require_monic_quadratic(poly: QuatPoly, tol: float | None):
    if poly.degree != 2:
        raise UnsupportedError(f"expected a quadratic polynomial, got degree {poly.degree}")
    if not poly.is_monic(tol):
        raise UnsupportedError(f"expected a monic polynomial, leading coefficient {poly.leading}")


@dataclass(frozen=True)
class QuadraticDivisor:
    """A monic real quadratic divisor of the norm polynomial."""

    poly: RealPoly
    root_indices: tuple[int, int] | None  # 0-based into the ascending real roots
    exact: bool


def quadratic_divisors(
    norm_poly: RealPoly, tol: float | None = None
) -> tuple[list[QuadraticDivisor], RealRootResult]:
    """All monic quadratic real divisors of a squarefree quartic norm polynomial."""
    result = real_roots(norm_poly, tol)
    roots = result.roots
    divisors: list[QuadraticDivisor] = []
    if len(roots) == 4:
        fell_back = False
        for i, j in itertools.combinations(range(4), 2):
            try:
                coeff_sum = roots[i] + roots[j]
                coeff_prod = roots[i] * roots[j]
                exact = result.exact and scalars.is_exact(coeff_sum)
            except MixedRadicalError:
                coeff_sum = to_float(roots[i]) + to_float(roots[j])
                coeff_prod = to_float(roots[i]) * to_float(roots[j])
                exact = False
                fell_back = True
            one = Fraction(1) if scalars.is_exact(coeff_prod) else 1.0
            divisors.append(
                QuadraticDivisor(RealPoly((coeff_prod, -coeff_sum, one)), (i, j), exact)
            )
        if fell_back:
            warnings.warn(
                "divisors mixing two different square roots are computed in floating point",
                ExactnessWarning,
                stacklevel=2,
            )
    else:
        if len(roots) == 2:
            coeff_sum = roots[0] + roots[1]
            coeff_prod = roots[0] * roots[1]
            one = Fraction(1) if scalars.is_exact(coeff_prod) else 1.0
            divisors.append(
                QuadraticDivisor(
                    RealPoly((coeff_prod, -coeff_sum, one)), None, scalars.is_exact(coeff_prod)
                )
            )
        for quad in result.quadratic_factors:
            divisors.append(QuadraticDivisor(quad.monic(), None, quad.backend == "exact"))
    divisors.sort(key=lambda d: (to_float(d.poly.coefficient(1)), to_float(d.poly.coefficient(0))))
    return divisors, result


def check_generic(poly: QuatPoly, tol: float | None = None) -> GenericityReport:
    """Test the genericity assumptions for a monic quadratic polynomial."""
    _require_monic_quadratic(poly, tol)
    c0, c1 = poly.coefficient(0), poly.coefficient(1)
    one = Quaternion.real(1, poly.signature)
    independent = _rank([one.coords, c1.coords, c0.coords], tol) == 3

    norm_poly = poly.norm_polynomial(tol)
    if norm_poly.backend == "exact":
        square_free = norm_poly.is_squarefree()
    else:
        result = real_roots(norm_poly, tol)
        seen = list(result.roots)
        spacing_tol = (tol if tol is not None else scalars.DEFAULT_TOLERANCE) ** 0.5
        square_free = all(
            abs(a - b) > spacing_tol for a, b in itertools.combinations(seen, 2)
        )

    invertible = True
    if square_free:
        divisors, _ = quadratic_divisors(norm_poly, tol)
        for div in divisors:
            if div.exact and poly.backend == "exact":
                r1 = c1 - Quaternion.real(div.poly.coefficient(1), poly.signature)
                if is_zero(r1.norm(), tol):
                    invertible = False
            else:
                r1 = c1.to_float() - Quaternion.real(
                    to_float(div.poly.coefficient(1)), poly.signature
                )
                if is_zero(r1.norm(), tol):
                    invertible = False
    return GenericityReport(independent, invertible, square_free)


def factor_from_divisor(
    poly: QuatPoly, divisor: RealPoly | QuadraticDivisor, tol: float | None = None
) -> Factorization:
    """The factorization of C determined by a monic quadratic divisor M of its norm."""
    _require_monic_quadratic(poly, tol)
    if isinstance(divisor, QuadraticDivisor):
        div_poly, exact_div = divisor.poly, divisor.exact
    else:
        div_poly, exact_div = divisor, divisor.backend == "exact"

    work = poly
    exact = poly.backend == "exact" and exact_div
    if not exact:
        work = poly.to_float()
        div_poly = div_poly.to_float()
    remainder = work - QuatPoly.from_real(div_poly, work.signature)
    if remainder.degree != 1:
        raise NonGenericError(f"C - M is not linear for divisor {div_poly}")
    h2 = linear_zero(remainder, tol)
    h1 = -work.coefficient(1) - h2

    product = monic_linear(h1) * monic_linear(h2)
    checker = (lambda a, b: a == b) if exact else (
        lambda a, b: a.approx_eq(b, max(1e-6, (tol or scalars.DEFAULT_TOLERANCE) * 1e3))
    )
    for d in range(3):
        if not checker(product.coefficient(d), work.coefficient(d)):
            raise AssertionError(
                f"factorization does not expand back to the input (degree {d} coefficient)"
            )
    return Factorization(h1=h1, h2=h2, divisor=div_poly, exact=exact)


def all_factorizations(poly: QuatPoly, tol: float | None = None) -> list[Factorization]:
    """Every factorization of a generic monic quadratic, deterministically ordered.

    Raises NonGenericError (with the report attached) when the genericity
    checks fail.
    """
    report = check_generic(poly, tol)
    if not report.verdict:
        raise NonGenericError(f"polynomial {poly} is not generic", report=report)
    norm_poly = poly.norm_polynomial(tol)
    divisors, _ = quadratic_divisors(norm_poly, tol)
    factorizations = []
    for div in divisors:
        f = factor_from_divisor(poly, div, tol)
        if div.root_indices is not None:
            f = replace(f, label=frozenset(i + 1 for i in div.root_indices))
        factorizations.append(f)
    return factorizations


def label_factorizations(
    factorizations: list[Factorization], roots, tol: float | None = None
) -> list[Factorization]:
    """Attach root-pair labels {i, j}; a no-op when fewer than 4 real roots exist."""
    roots = list(roots)
    if len(roots) != 4:
        return list(factorizations)
    if sorted(map(to_float, roots)) != list(map(to_float, roots)):
        raise ValueError("roots must be in ascending order")
    labeled = []
    for f in factorizations:
        label = f.label
        if label is None:
            for i, j in itertools.combinations(range(4), 2):
                m1 = -(roots[i] + roots[j])
                m0 = roots[i] * roots[j]
                if scalar_eq(f.divisor.coefficient(1), m1, tol) and scalar_eq(
                    f.divisor.coefficient(0), m0, tol
                ):
                    label = frozenset((i + 1, j + 1))
                    break
        labeled.append(replace(f, label=label))
    return labeled


def complementary(f: Factorization, poly: QuatPoly, tol: float | None = None) -> Factorization:
    """The complementary factorization: left/right factors conjugated by ``conj(h2) - h1``.

    The new divisor is relatively prime to f's and the two left factors' norm
    quadratics multiply to the norm polynomial of C.
    """
    h1, h2 = f.h1, f.h2
    d = h2.conjugate() - h1
    try:
        d_inv = d.inverse(tol)
    except NonInvertibleError as exc:
        raise NonGenericError(
            f"conj(h2) - h1 = {d} is not invertible; no complementary factorization"
        ) from exc
    k2 = d_inv * h1 * d
    k1 = d_inv * h2 * d
    label = None
    if f.label is not None:
        label = frozenset({1, 2, 3, 4} - f.label)
    divisor = norm_quadratic(k2)
    return Factorization(h1=k1, h2=k2, divisor=divisor, label=label, exact=f.exact)


def complementary_pairs(
    factorizations: list[Factorization], norm_poly: RealPoly, tol: float | None = None
) -> list[tuple[int, int]]:
    """Index pairs of complementary factorizations, by disjoint labels when present,
    otherwise by the divisor-product test."""
    pairs = []
    seen = set()
    for i, f in enumerate(factorizations):
        if i in seen:
            continue
        for j in range(i + 1, len(factorizations)):
            if j in seen:
                continue
            g = factorizations[j]
            if f.label is not None and g.label is not None:
                match = not (f.label & g.label)
            else:
                product = f.left_norm_quadratic() * g.left_norm_quadratic()
                loose = max(1e-6, (tol or scalars.DEFAULT_TOLERANCE) * 1e3)
                eq_tol = loose if "float" in (product.backend, norm_poly.backend) else tol
                match = all(
                    scalar_eq(product.coefficient(d), norm_poly.coefficient(d), eq_tol)
                    for d in range(5)
                )
            if match:
                pairs.append((i, j))
                seen.update((i, j))
                break
    return pairs
