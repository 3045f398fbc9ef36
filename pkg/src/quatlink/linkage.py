"""Four-bar linkages built from quadratic factorizations, and their coupler conic.

Every factorization ``C = (t - h1)(t - h2)`` yields one leg: a fixed revolute
joint at ``[h1 - conj(h1)]`` and a moving joint whose path is
``(t - h1)(h2 - conj(h2))(t - conj(h1))``.  Legs of two complementary
factorizations form a closed quadrilateral with equal opposite quadrances.
The leg lines intersect in a point that traces a conic; its tangents drive a
reflection exchanging fixed and moving joints, its null tangents intersect in
the fixed joints, and the null-tangent parameters are the real roots of the
norm polynomial.  :func:`verify_linkage` machine-checks all of this.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import scalars
from .algebra import Quaternion
from .errors import (
    DegenerateError,
    MismatchError,
    MixedRadicalError,
    NonGenericError,
    NullPointError,
)
from .factorization import (
    Factorization,
    GenericityReport,
    all_factorizations,
    check_generic,
    complementary_pairs,
)
from .geometry import (
    ProjLine,
    ProjPoint,
    collinear,
    force_vectorial,
    incident,
    inner_product,
    join,
    meet,
    midpoints,
    quadrance,
    reflect,
    rotate,
    rotation_center,
)
from .polynomials import QuatPoly, RealPoly, real_roots
from .scalars import is_zero, scalar_eq, to_float


# ---------------------------------------------------------------------------
# polynomial helpers with vectorial quaternion coefficients


def poly_cross(p: QuatPoly, q: QuatPoly) -> QuatPoly:
    """Coefficient-wise bilinear extension of the cross product ``(pq - qp)/2``."""
    return (p * q - q * p) * Fraction(1, 2)


def poly_inner(p: QuatPoly, q: QuatPoly, tol: float | None = None) -> RealPoly:
    """Bilinear extension of the inner product; real because p, q are vectorial."""
    from .polynomials import real_coefficients

    product = (p * q.conjugate() + q * p.conjugate()) * Fraction(1, 2)
    real_coefficients(product, tol, "inner product of vectorial polynomials")
    return RealPoly(tuple(c.w for c in product.coeffs))


def _coordinate_polys(p: QuatPoly) -> tuple[RealPoly, RealPoly, RealPoly]:
    return (
        RealPoly(tuple(c.x for c in p.coeffs)),
        RealPoly(tuple(c.y for c in p.coeffs)),
        RealPoly(tuple(c.z for c in p.coeffs)),
    )


def _divide_by_real(p: QuatPoly, divisor: RealPoly) -> QuatPoly:
    """Exact coefficient-wise division of a quaternion polynomial by a real one."""
    out = []
    for coord in _coordinate_polys(p):
        quot, rem = coord.divmod(divisor)
        if rem.degree >= 0:
            raise ArithmeticError("content division left a remainder")
        out.append(quot)
    degree = max(c.degree for c in out)
    sig = p.signature
    return QuatPoly(
        tuple(
            Quaternion(0, out[0].coefficient(d), out[1].coefficient(d), out[2].coefficient(d), sig)
            for d in range(degree + 1)
        )
    )


def _real_content(p: QuatPoly, tol: float | None = None) -> RealPoly:
    """Greatest common real-polynomial factor of the coordinate polynomials."""
    coords = [c for c in _coordinate_polys(p) if c.degree >= 0]
    if not coords:
        raise DegenerateError("zero polynomial has no content")
    if p.backend == "exact":
        content = coords[0]
        for c in coords[1:]:
            content = content.gcd(c)
            if content.degree == 0:
                break
        return content.monic() if content.degree >= 0 else RealPoly((1,))
    return _float_content(coords, tol)


def _float_content(coords: list[RealPoly], tol: float | None) -> RealPoly:
    """Numeric content via common roots of the coordinate polynomials."""
    import numpy as np

    gate = max(1e-6, (tol or scalars.DEFAULT_TOLERANCE) * 1e3)
    descending = []
    root_sets = []
    for c in coords:
        cs = np.array([to_float(v) for v in reversed(c.coeffs)])
        descending.append(cs)
        root_sets.append(list(np.roots(cs)))

    def polish(z: complex) -> complex:
        # Newton on the coordinate polynomial with the best-conditioned derivative
        best = None
        for cs in descending:
            dv = abs(np.polyval(np.polyder(cs), z))
            if best is None or dv > best[0]:
                best = (dv, cs)
        cs = best[1]
        der = np.polyder(cs)
        for _ in range(6):
            dv = np.polyval(der, z)
            if dv == 0:
                break
            step = np.polyval(cs, z) / dv
            z -= step
            if abs(step) < 1e-15 * max(1.0, abs(z)):
                break
        return z

    common = []
    for r in root_sets[0]:
        candidate = r
        ok = True
        for other in root_sets[1:]:
            hit = None
            for s in other:
                if abs(s - candidate) <= gate * max(1.0, abs(candidate)):
                    hit = s
                    break
            if hit is None:
                ok = False
                break
            other.remove(hit)
        if ok:
            common.append(polish(candidate))
    used = [False] * len(common)
    content = RealPoly((1.0,))
    for idx, r in enumerate(common):
        if used[idx]:
            continue
        if abs(r.imag) <= gate:
            content = content * RealPoly((-float(r.real), 1.0))
            used[idx] = True
        else:
            for jdx in range(idx + 1, len(common)):
                if not used[jdx] and abs(common[jdx] - r.conjugate()) <= gate:
                    content = content * RealPoly((float(abs(r) ** 2), float(-2 * r.real), 1.0))
                    used[idx] = used[jdx] = True
                    break
            else:
                used[idx] = True
    return content


def _float_divide(p: QuatPoly, divisor: RealPoly) -> QuatPoly:
    import numpy as np

    out = []
    max_deg = -1
    for coord in _coordinate_polys(p):
        if coord.degree < 0:
            out.append(coord)
            continue
        cs = [to_float(v) for v in reversed(coord.coeffs)]
        ds = [to_float(v) for v in reversed(divisor.coeffs)]
        quot, _ = np.polydiv(cs, ds)
        out.append(RealPoly(tuple(float(v) for v in reversed(quot))))
    max_deg = max(c.degree for c in out)
    sig = p.signature
    return QuatPoly(
        tuple(
            Quaternion(
                0.0,
                to_float(out[0].coefficient(d)),
                to_float(out[1].coefficient(d)),
                to_float(out[2].coefficient(d)),
                sig,
            )
            for d in range(max_deg + 1)
        )
    )


# ---------------------------------------------------------------------------
# linkage data types


@dataclass(frozen=True)
class Leg:
    """One leg of the linkage: a factorization with its two revolute joints."""

    factorization: Factorization
    fixed_joint: ProjPoint
    moving_joint_initial: ProjPoint
    label: frozenset | None = None

    def path_poly(self) -> QuatPoly:
        """Moving-joint path ``(t - h1)(h2 - conj(h2))(t - conj(h1))`` as a polynomial."""
        from .polynomials import monic_linear

        h1, h2 = self.factorization.h1, self.factorization.h2
        v = h2 - h2.conjugate()
        return monic_linear(h1) * QuatPoly((v,)) * monic_linear(h1.conjugate())


@dataclass(frozen=True)
class FourBar:
    """All legs of a generic quadratic motion polynomial."""

    source: QuatPoly
    legs: tuple[Leg, ...]
    norm_poly: RealPoly
    norm_roots: tuple
    roots_exact: bool
    genericity: GenericityReport

    def complementary_leg_pairs(self, tol: float | None = None) -> list[tuple[int, int]]:
        return complementary_pairs(
            [leg.factorization for leg in self.legs], self.norm_poly, tol
        )


@dataclass(frozen=True)
class CouplerConic:
    """The conic traced by the meet of two complementary legs' lines.

    ``sigma`` is the raw quartic parametrization, ``content`` its real scalar
    factor, ``reduced`` the quadratic parametrization G.  ``null_tangent_params``
    are the real roots of ``<G x G', G x G'>`` and the focal points are the
    pairwise meets of the null tangents.
    """

    sigma: QuatPoly
    content: RealPoly
    reduced: QuatPoly
    dual: QuatPoly
    tangent_quartic: RealPoly
    null_tangent_params: tuple
    null_tangents: tuple[ProjLine, ...]
    focal_points: tuple[ProjPoint, ...]
    exact: bool

    def point_at(self, t) -> ProjPoint:
        return ProjPoint(force_vectorial(self.reduced(t)))

    def tangent_at(self, t) -> ProjLine:
        return ProjLine(force_vectorial(self.dual(t)))


def build_linkage(poly: QuatPoly, tol: float | None = None) -> FourBar:
    """Construct every leg of a generic monic quadratic; joints are rotation centers."""
    report = check_generic(poly, tol)
    if not report.verdict:
        raise NonGenericError(f"polynomial {poly} is not generic", report=report)
    factorizations = all_factorizations(poly, tol)
    norm_poly = poly.norm_polynomial(tol)
    roots = real_roots(norm_poly, tol)
    legs = []
    for f in factorizations:
        legs.append(
            Leg(
                factorization=f,
                fixed_joint=rotation_center(f.h1, tol),
                moving_joint_initial=rotation_center(f.h2, tol),
                label=f.label,
            )
        )
    return FourBar(
        source=poly,
        legs=tuple(legs),
        norm_poly=norm_poly,
        norm_roots=roots.roots,
        roots_exact=roots.exact,
        genericity=report,
    )


def joint_path(leg: Leg, t, tol: float | None = None) -> ProjPoint:
    """Position of the leg's moving joint at parameter t."""
    h1, h2 = leg.factorization.h1, leg.factorization.h2
    t = scalars.as_scalar(t)
    if isinstance(t, float) and h1.backend == "exact":
        h1, h2 = h1.to_float(), h2.to_float()
    elif h1.backend == "float" and scalars.is_exact(t):
        t = scalars.to_float(t)
    one = Quaternion.real(1 if h1.backend == "exact" else 1.0, h1.signature)
    a = one * t - h1
    b = one * t - h1.conjugate()
    rep = force_vectorial(a * (h2 - h2.conjugate()) * b)
    try:
        return ProjPoint(rep, tol)
    except DegenerateError:
        raise DegenerateError(f"moving joint degenerates at t = {t}") from None


def coupler_point(
    leg_a: Leg, leg_b: Leg, t, conic: "CouplerConic | None" = None, tol: float | None = None
) -> ProjPoint:
    """Meet of the two leg lines at parameter t; folded positions fall back to
    the content-reduced conic parametrization."""
    try:
        ha = joint_path(leg_a, t, tol)
        hb = joint_path(leg_b, t, tol)
        la = join(leg_a.fixed_joint, ha, tol)
        lb = join(leg_b.fixed_joint, hb, tol)
        return meet(la, lb, tol)
    except DegenerateError:
        if conic is None:
            conic = coupler_conic(leg_a, leg_b, tol)
        return conic.point_at(t)


def coupler_conic(leg_a: Leg, leg_b: Leg, tol: float | None = None) -> CouplerConic:
    """The conic swept by :func:`coupler_point`, with null tangents and focal points."""
    eta = leg_a.path_poly()
    kappa = leg_b.path_poly()
    line_a = poly_cross(QuatPoly((leg_a.fixed_joint.rep,)), eta)
    line_b = poly_cross(QuatPoly((leg_b.fixed_joint.rep,)), kappa)
    sigma = poly_cross(line_a, line_b)
    if sigma.degree < 2:
        raise NonGenericError("coupler parametrization collapses below a conic")

    exact = sigma.backend == "exact"
    content = _real_content(sigma, tol)
    if content.degree > 0:
        reduced = _divide_by_real(sigma, content) if exact else _float_divide(sigma, content)
    else:
        reduced = sigma
    if not exact:
        reduced = _trim_small(reduced, tol)
    if reduced.degree != 2:
        raise NonGenericError(
            f"content extraction left degree {reduced.degree}, expected a conic"
        )

    dual = poly_cross(reduced, reduced.derivative())
    if not exact:
        dual = _trim_small(dual, tol)
    if dual.degree < 0:
        raise NonGenericError("degenerate dual: conic has no tangent parametrization")
    quartic = poly_inner(dual, dual, tol)
    if quartic.degree < 0:
        raise NonGenericError("tangent norm polynomial vanishes identically")
    params = real_roots(quartic, tol)
    tangents = []
    for r in params.roots:
        try:
            tangents.append(ProjLine(force_vectorial(dual(r)), tol))
        except MixedRadicalError:
            tangents.append(ProjLine(force_vectorial(dual.to_float()(to_float(r))), tol))
    focal = []
    for i, j in itertools.combinations(range(len(tangents)), 2):
        try:
            focal.append(meet(tangents[i], tangents[j], tol))
        except (MixedRadicalError, MismatchError):
            focal.append(meet(tangents[i].to_float(), tangents[j].to_float(), tol))
    return CouplerConic(
        sigma=sigma,
        content=content,
        reduced=reduced,
        dual=dual,
        tangent_quartic=quartic,
        null_tangent_params=params.roots,
        null_tangents=tuple(tangents),
        focal_points=tuple(focal),
        exact=exact and params.exact,
    )


def _trim_small(p: QuatPoly, tol: float | None) -> QuatPoly:
    """Drop float leading coefficients that are rounding noise."""
    gate = max(1e-8, (tol or scalars.DEFAULT_TOLERANCE) * 10)
    top = max(
        (abs(to_float(x)) for c in p.coeffs for x in c.coords),
        default=0.0,
    )
    if top == 0.0:
        return p
    coeffs = list(p.coeffs)
    while len(coeffs) > 1 and all(abs(to_float(x)) <= gate * top for x in coeffs[-1].coords):
        coeffs.pop()
    return QuatPoly(tuple(coeffs))


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool | None  # None == skipped
    residual: float = 0.0
    reason: str = ""
    details: tuple[str, ...] = ()

    @property
    def skipped(self) -> bool:
        return self.passed is None


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _default_samples(norm_poly: RealPoly, count: int, tol: float | None):
    """Deterministic rational parameters avoiding the norm polynomial's roots."""
    out = []
    k = 0
    while len(out) < count and k < 100 * count + 100:
        k += 1
        # alternating walk through distinct non-integer rationals
        t = Fraction((-1) ** k * (3 * k + 1), 7)
        if t in out:
            continue
        if not is_zero(norm_poly(t), tol):
            out.append(t)
    return out


def _rel_diff(a, b) -> float:
    fa, fb = to_float(a), to_float(b)
    return abs(fa - fb) / max(1.0, abs(fa), abs(fb))


def _as_backend(element, want_float: bool):
    """Coerce a point/line to float when a mixed-backend linkage demands it."""
    if want_float and element.backend == "exact":
        return element.to_float()
    return element


def _projective_residual(p: ProjPoint, q: ProjPoint) -> float:
    if p.backend == "exact" and q.backend == "exact" and p == q:
        return 0.0
    a = [to_float(c) for c in p.coords()]
    b = [to_float(c) for c in q.coords()]
    a = [c / max(map(abs, a)) for c in a]
    b = [c / max(map(abs, b)) for c in b]
    pairs = ((0, 1), (0, 2), (1, 2))
    return max(abs(a[i] * b[j] - a[j] * b[i]) for i, j in pairs)


def verify_linkage(
    fb: FourBar, samples: int = 5, tol: float | None = None
) -> VerificationReport:
    """Run the geometric checks for a linkage and report each outcome.

    Checks: equal opposite quadrances, tangent-reflection exchange of fixed and
    moving joints, null complete quadrilaterals for the six fixed/moving joints,
    collinearity of linked joints, norm roots among the null-tangent parameters,
    concurrency of all leg lines in the coupler point, the tangent poles lying
    on one conic, and the tangent reflection exchanging every joint pair at once.
    """
    checks: list[CheckResult] = []
    pairs = fb.complementary_leg_pairs(tol)
    ts = _default_samples(fb.norm_poly, samples, tol)
    six = len(fb.legs) == 6 and all(leg.label is not None for leg in fb.legs)
    # cross-leg checks need one backend; a single float leg pulls everything to float
    mixed = any(
        leg.fixed_joint.backend == "float" or leg.moving_joint_initial.backend == "float"
        for leg in fb.legs
    )

    conics: dict[tuple[int, int], CouplerConic] = {}
    for pair in pairs:
        conics[pair] = coupler_conic(fb.legs[pair[0]], fb.legs[pair[1]], tol)

    checks.append(_check_quadrances(fb, pairs, ts, tol))
    checks.append(_check_tangent_reflection(fb, pairs, conics, ts, tol))
    checks.extend(_check_null_quadrilaterals(fb, ts, tol, six, mixed))
    checks.append(_check_linked_collinearity(fb, ts, tol, six, mixed))
    checks.append(_check_null_tangent_params(fb, pairs, conics, tol))
    checks.append(_check_concurrency(fb, pairs, conics, ts, tol, mixed))
    checks.append(_check_dual_conic(fb, pairs, conics, ts, tol))
    checks.append(_check_homology_all_joints(fb, pairs, conics, ts, tol, six, mixed))
    return VerificationReport(tuple(checks))


def _check_quadrances(fb, pairs, ts, tol) -> CheckResult:
    name = "equal_opposite_quadrances"
    if not pairs:
        return CheckResult(name, None, reason="no complementary pair found")
    worst = 0.0
    details = []
    ok = True
    for i, j in pairs:
        a, b = fb.legs[i], fb.legs[j]
        try:
            leg_a = quadrance(a.fixed_joint, a.moving_joint_initial, tol)
            leg_b = quadrance(b.fixed_joint, b.moving_joint_initial, tol)
            side_fixed = quadrance(a.fixed_joint, b.fixed_joint, tol)
            side_moving = quadrance(a.moving_joint_initial, b.moving_joint_initial, tol)
        except NullPointError:
            details.append(f"pair ({i},{j}): a joint is null; skipped")
            continue
        if not scalar_eq(leg_a, leg_b, tol) or not scalar_eq(side_fixed, side_moving, tol):
            ok = False
            details.append(f"pair ({i},{j}): initial quadrances differ")
        worst = max(worst, _rel_diff(leg_a, leg_b), _rel_diff(side_fixed, side_moving))
        for t in ts:
            try:
                ha = joint_path(a, t, tol)
                hb = joint_path(b, t, tol)
                qa = quadrance(a.fixed_joint, ha, tol)
                qb = quadrance(b.fixed_joint, hb, tol)
                qm = quadrance(ha, hb, tol)
            except (NullPointError, DegenerateError):
                continue
            if not (
                scalar_eq(qa, qb, tol)
                and scalar_eq(qa, leg_a, tol)
                and scalar_eq(qm, side_fixed, tol)
            ):
                ok = False
                details.append(f"pair ({i},{j}) at t={t}: quadrance identity fails")
            worst = max(worst, _rel_diff(qa, qb), _rel_diff(qm, side_fixed))
    return CheckResult(name, ok, worst, details=tuple(details))


def _check_tangent_reflection(fb, pairs, conics, ts, tol) -> CheckResult:
    name = "tangent_reflection"
    if not pairs:
        return CheckResult(name, None, reason="no complementary pair found")
    ok = True
    worst = 0.0
    details = []
    tested = 0
    for pair in pairs:
        a, b = fb.legs[pair[0]], fb.legs[pair[1]]
        conic = conics[pair]
        for t in ts:
            try:
                tangent = conic.tangent_at(t)
                if tangent.is_null(tol):
                    continue
                image_b = reflect(tangent, a.fixed_joint, tol)
                image_a = reflect(tangent, b.fixed_joint, tol)
                kb = joint_path(b, t, tol)
                ka = joint_path(a, t, tol)
            except DegenerateError:
                continue
            tested += 1
            res = max(_projective_residual(image_b, kb), _projective_residual(image_a, ka))
            worst = max(worst, res)
            if not (image_b == kb and image_a == ka):
                ok = False
                details.append(f"pair {pair} at t={t}: reflection does not exchange joints")
    if tested == 0:
        return CheckResult(name, None, reason="no usable sample parameters")
    return CheckResult(name, ok, worst, details=tuple(details))


def _quadrilateral_structure(points, tol) -> tuple[bool, list[str]]:
    """Exactly four null lines, each through exactly three of the six points,
    every point on exactly two lines."""
    details = []
    lines = []
    for i, j in itertools.combinations(range(6), 2):
        try:
            candidate = join(points[i], points[j], tol)
        except DegenerateError:
            details.append(f"points {i},{j} coincide")
            return False, details
        members = tuple(k for k in range(6) if incident(candidate, points[k], tol))
        if len(members) >= 3 and not any(set(members) == set(m) for _, m in lines):
            lines.append((candidate, members))
    if len(lines) != 4:
        details.append(f"found {len(lines)} lines with 3+ points, expected 4")
        return False, details
    ok = True
    counts = {k: 0 for k in range(6)}
    for line_obj, members in lines:
        if len(members) != 3:
            ok = False
            details.append(f"line through {members} has {len(members)} points")
        if not line_obj.is_null(tol):
            ok = False
            details.append(f"line through {members} is not null")
        for m in members:
            counts[m] += 1
    if any(c != 2 for c in counts.values()):
        ok = False
        details.append(f"vertex incidence counts {counts} != 2 each")
    return ok, details


def _check_null_quadrilaterals(fb, ts, tol, six, mixed) -> list[CheckResult]:
    results = []
    if not six:
        reason = "requires six labeled legs"
        results.append(CheckResult("null_quadrilateral_fixed", None, reason=reason))
        results.append(CheckResult("null_quadrilateral_moving", None, reason=reason))
        return results
    fixed_ok, fixed_details = _quadrilateral_structure(
        [_as_backend(leg.fixed_joint, mixed) for leg in fb.legs], tol
    )
    results.append(
        CheckResult("null_quadrilateral_fixed", fixed_ok, details=tuple(fixed_details))
    )
    moving_ok = True
    moving_details = []
    initial_ok, initial_details = _quadrilateral_structure(
        [_as_backend(leg.moving_joint_initial, mixed) for leg in fb.legs], tol
    )
    if not initial_ok:
        moving_ok = False
        moving_details.extend(f"initial: {d}" for d in initial_details)
    for t in ts[:2]:
        try:
            points = [_as_backend(joint_path(leg, t, tol), mixed) for leg in fb.legs]
        except DegenerateError:
            continue
        ok, details = _quadrilateral_structure(points, tol)
        if not ok:
            moving_ok = False
            moving_details.extend(f"t={t}: {d}" for d in details)
    results.append(
        CheckResult("null_quadrilateral_moving", moving_ok, details=tuple(moving_details))
    )
    return results


def _check_linked_collinearity(fb, ts, tol, six, mixed) -> CheckResult:
    name = "linked_collinearity"
    if not six:
        return CheckResult(name, None, reason="requires six labeled legs")
    ok = True
    details = []
    for index in (1, 2, 3, 4):
        moving_triple = [leg for leg in fb.legs if index in leg.label]
        fixed_triple = [leg for leg in fb.legs if index not in leg.label]
        if len(moving_triple) != 3 or len(fixed_triple) != 3:
            ok = False
            details.append(f"index {index}: malformed label structure")
            continue
        moving_pts = [_as_backend(leg.moving_joint_initial, mixed) for leg in moving_triple]
        fixed_pts = [_as_backend(leg.fixed_joint, mixed) for leg in fixed_triple]
        if not collinear(*moving_pts, tol):
            ok = False
            details.append(f"moving joints sharing index {index} not collinear")
        if not collinear(*fixed_pts, tol):
            ok = False
            details.append(f"fixed joints omitting index {index} not collinear")
        for t in ts[:2]:
            try:
                pts = [_as_backend(joint_path(leg, t, tol), mixed) for leg in moving_triple]
            except DegenerateError:
                continue
            if not collinear(*pts, tol):
                ok = False
                details.append(f"moving joints sharing index {index} not collinear at t={t}")
    return CheckResult(name, ok, details=tuple(details))


def _check_null_tangent_params(fb, pairs, conics, tol) -> CheckResult:
    name = "norm_roots_are_null_tangent_params"
    if not pairs:
        return CheckResult(name, None, reason="no complementary pair found")
    if not fb.norm_roots:
        return CheckResult(name, None, reason="norm polynomial has no real roots")
    ok = True
    details = []
    loose = max(1e-6, (tol or scalars.DEFAULT_TOLERANCE) * 1e3)
    for pair in pairs:
        params = list(conics[pair].null_tangent_params)
        for root in fb.norm_roots:
            hit = None
            for p in params:
                both_exact = scalars.is_exact(p) and scalars.is_exact(root)
                if scalar_eq(p, root, tol if both_exact else loose):
                    hit = p
                    break
            if hit is None:
                ok = False
                details.append(f"pair {pair}: norm root {root} missing from tangent params")
            else:
                params.remove(hit)
    return CheckResult(name, ok, details=tuple(details))


def _check_concurrency(fb, pairs, conics, ts, tol, mixed) -> CheckResult:
    name = "leg_line_concurrency"
    if not pairs:
        return CheckResult(name, None, reason="no complementary pair found")
    pair0 = pairs[0]
    ok = True
    worst = 0.0
    details = []
    tested = 0
    for t in ts:
        try:
            s_point = _as_backend(
                coupler_point(fb.legs[pair0[0]], fb.legs[pair0[1]], t, conics[pair0], tol),
                mixed,
            )
        except DegenerateError:
            continue
        for idx, leg in enumerate(fb.legs):
            try:
                moving = joint_path(leg, t, tol)
                leg_line = _as_backend(
                    join(_as_backend(leg.fixed_joint, mixed), _as_backend(moving, mixed), tol),
                    mixed,
                )
            except DegenerateError:
                continue
            tested += 1
            value = inner_product(leg_line.rep, s_point.rep)
            scale = max(abs(to_float(c)) for c in leg_line.coords()) * max(
                abs(to_float(c)) for c in s_point.coords()
            )
            worst = max(worst, abs(to_float(value)) / scale if scale else 0.0)
            if not incident(leg_line, s_point, tol):
                ok = False
                details.append(f"leg {idx} line misses the coupler point at t={t}")
    if tested == 0:
        return CheckResult(name, None, reason="no usable sample parameters")
    return CheckResult(name, ok, worst, details=tuple(details))


def _check_dual_conic(fb, pairs, conics, ts, tol) -> CheckResult:
    """The poles of the coupler tangents lie on one conic (the homology centers)."""
    name = "tangent_poles_on_conic"
    if not pairs:
        return CheckResult(name, None, reason="no complementary pair found")
    conic = conics[pairs[0]]
    points = []
    for t in _default_samples(fb.norm_poly, max(8, len(ts)), tol):
        try:
            tangent = conic.tangent_at(t)
        except DegenerateError:
            continue
        points.append(tangent)
        if len(points) == 6:
            break
    if len(points) < 6:
        return CheckResult(name, None, reason="not enough usable sample parameters")
    rows = []
    for p in points:
        x, y, z = p.coords()
        rows.append([x * x, y * y, z * z, x * y, x * z, y * z])
    det = _det6(rows)
    if all(scalars.is_exact(v) for row in rows for v in row):
        ok = is_zero(det, tol)
        return CheckResult(name, ok, 0.0 if ok else abs(to_float(det)))
    scale = max(abs(to_float(v)) for row in rows for v in row) or 1.0
    res = abs(to_float(det)) / scale**6
    return CheckResult(name, res <= max(1e-6, (tol or scalars.DEFAULT_TOLERANCE) * 1e3), res)


def _det6(rows) -> object:
    """Exact cofactor determinant of a 6x6 matrix of scalars."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for col in range(n):
        pivot = rows[0][col]
        minor = [[row[c] for c in range(n) if c != col] for row in rows[1:]]
        term = pivot * _det6(minor)
        if col % 2:
            term = -term
        total = term if total is None else total + term
    return total


def _check_homology_all_joints(fb, pairs, conics, ts, tol, six, mixed) -> CheckResult:
    """One reflection (in the coupler tangent) exchanges every fixed joint with
    the moving joint of the complementary label at once."""
    name = "tangent_reflection_all_legs"
    if not six:
        return CheckResult(name, None, reason="requires six labeled legs")
    conic = conics[pairs[0]]
    by_label = {leg.label: leg for leg in fb.legs}
    ok = True
    worst = 0.0
    details = []
    tested = 0
    for t in ts[:3]:
        try:
            tangent = _as_backend(conic.tangent_at(t), mixed)
            if tangent.is_null(tol):
                continue
        except DegenerateError:
            continue
        for leg in fb.legs:
            partner = by_label[frozenset({1, 2, 3, 4} - leg.label)]
            try:
                image = reflect(tangent, _as_backend(leg.fixed_joint, mixed), tol)
                target = _as_backend(joint_path(partner, t, tol), mixed)
            except DegenerateError:
                continue
            tested += 1
            res = _projective_residual(image, target)
            worst = max(worst, res)
            if image != target:
                ok = False
                details.append(
                    f"t={t}: fixed joint {sorted(leg.label)} does not map to moving {sorted(partner.label)}"
                )
    if tested == 0:
        return CheckResult(name, None, reason="no usable sample parameters")
    return CheckResult(name, ok, worst, details=tuple(details))


# ---------------------------------------------------------------------------
# motion sampling and quadrilateral construction


@dataclass(frozen=True)
class MotionSample:
    t: object
    null_position: bool
    joints: tuple
    coupler: object
    tracers: tuple
    notes: tuple[str, ...] = ()


def sample_motion(
    fb: FourBar,
    t_from,
    t_to,
    count: int,
    tracers: tuple[ProjPoint, ...] = (),
    tol: float | None = None,
) -> list[MotionSample]:
    """Sample the linkage motion at ``count`` uniformly spaced parameters.

    Each row holds every leg's moving joint, the coupler point, the images of
    the tracer points under the motion, and a flag at parameters where the norm
    polynomial vanishes.  Degenerate entries are None with a note, never dropped.
    """
    if count < 2:
        raise ValueError("need at least two samples")
    t_from = scalars.as_scalar(t_from)
    t_to = scalars.as_scalar(t_to)
    step = (t_to - t_from) / (count - 1)
    pairs = fb.complementary_leg_pairs(tol)
    conic = None
    if pairs:
        conic = coupler_conic(fb.legs[pairs[0][0]], fb.legs[pairs[0][1]], tol)
    rows = []
    for k in range(count):
        t = t_from + step * k
        notes = []
        null_flag = is_zero(fb.norm_poly(t), tol)
        joints = []
        for idx, leg in enumerate(fb.legs):
            try:
                joints.append(joint_path(leg, t, tol))
            except DegenerateError:
                joints.append(None)
                notes.append(f"joint {idx} degenerate")
        coupler = None
        if pairs:
            try:
                coupler = coupler_point(
                    fb.legs[pairs[0][0]], fb.legs[pairs[0][1]], t, conic, tol
                )
            except DegenerateError:
                notes.append("coupler point degenerate")
        c_value = fb.source(t)
        tracer_images = []
        for idx, tracer in enumerate(tracers):
            rep = force_vectorial(c_value * tracer.rep * c_value.conjugate())
            try:
                tracer_images.append(ProjPoint(rep, tol))
            except DegenerateError:
                tracer_images.append(None)
                notes.append(f"tracer {idx} collapses")
        rows.append(
            MotionSample(
                t=t,
                null_position=null_flag,
                joints=tuple(joints),
                coupler=coupler,
                tracers=tuple(tracer_images),
                notes=tuple(notes),
            )
        )
    return rows


def construct_equal_quadrilateral(
    a12: ProjPoint, a34: ProjPoint, b34: ProjPoint, tol: float | None = None
) -> tuple[ProjPoint, ...]:
    """Fourth vertices completing a quadrilateral with equal opposite quadrances.

    For each midpoint of (a12, b34) the candidate is the point reflection of a34
    in that midpoint; candidates satisfy q(a12, a34) = q(B, b34) and
    q(a12, B) = q(a34, b34).  Up to two solutions; none when no real midpoint
    exists.
    """
    for p, q in ((a12, a34), (a12, b34), (a34, b34)):
        if p == q:
            raise DegenerateError("equal-quadrance construction needs three distinct points")
    for p in (a12, a34, b34):
        if p.is_null(tol):
            raise NullPointError("equal-quadrance construction needs non-null points")
    centers = midpoints(a12, b34, tol)
    out = []
    q_sides = quadrance(a12, a34, tol)
    q_base = quadrance(a34, b34, tol)
    for center in centers:
        candidate = rotate(center.rep, a34, tol)
        if candidate.is_null(tol):
            continue
        try:
            ok = scalar_eq(quadrance(candidate, b34, tol), q_sides, tol) and scalar_eq(
                quadrance(a12, candidate, tol), q_base, tol
            )
        except NullPointError:
            continue
        if ok:
            out.append(candidate)
    return tuple(out)
