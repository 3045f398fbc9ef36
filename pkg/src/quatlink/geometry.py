"""Projective metric geometry over vectorial quaternions.

Points and lines of the projective plane are represented by nonzero vectorial
quaternions.  With the split signature this is universal hyperbolic geometry:
the quadratic form ``<x, x>`` cuts out the null circle, incidence is
``<u, x> = 0``, and the quadrance ``1 - <a,b>^2 / (<a,a><b,b>)`` plays the role
of squared distance.  With the Hamiltonian signature the same formulas describe
elliptic geometry (no real null points).

The incidence pairing and the null circle use the same bilinear form, so the
pole of the line [u] is the point [u]; reflection in a line and in its pole are
one operation.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from . import scalars
from .algebra import Quaternion, Signature
from .errors import DegenerateError, MismatchError, NonVectorialError, NullPointError
from .scalars import SqrtExt, exact_sqrt, is_zero, scalar_eq, to_float


def _require_vectorial(q: Quaternion, tol: float | None = None) -> Quaternion:
    if not isinstance(q, Quaternion):
        raise NonVectorialError(f"expected a quaternion, got {q!r}")
    if not q.is_vectorial(tol):
        raise NonVectorialError(f"nonzero real part in {q}")
    return force_vectorial(q)


def force_vectorial(q: Quaternion) -> Quaternion:
    """Zero the real coordinate (for results that are vectorial by construction)."""
    zero = 0.0 if q.backend == "float" else 0
    return Quaternion(zero, q.x, q.y, q.z, q.signature)


def inner_product(a: Quaternion, b: Quaternion, tol: float | None = None):
    """``(a*conj(b) + b*conj(a)) / 2`` for vectorial a, b, as a scalar."""
    a = _require_vectorial(a, tol)
    b = _require_vectorial(b, tol)
    value = a * b.conjugate() + b * a.conjugate()
    return value.w / 2


def cross_product(a: Quaternion, b: Quaternion, tol: float | None = None) -> Quaternion:
    """``(a*b - b*a) / 2`` for vectorial a, b; vectorial again."""
    a = _require_vectorial(a, tol)
    b = _require_vectorial(b, tol)
    return (a * b - b * a) / 2


class _ProjElement:
    """Shared behavior of projective points and lines (a nonzero vectorial rep)."""

    __slots__ = ("rep",)

    def __init__(self, rep: Quaternion, tol: float | None = None):
        rep = _require_vectorial(rep, tol)
        if rep.backend == "exact":
            if all(c == 0 for c in rep.coords):
                raise DegenerateError("zero vector does not represent a projective element")
        elif rep.is_zero(tol):
            raise DegenerateError("numerically zero projective representative")
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("projective elements are immutable")

    @property
    def signature(self) -> Signature:
        return self.rep.signature

    @property
    def backend(self) -> str:
        return self.rep.backend

    def coords(self) -> tuple:
        return (self.rep.x, self.rep.y, self.rep.z)

    def canonical_coords(self) -> tuple:
        """Scale-normalized coordinates for display and serialization.

        Rational reps are cleared to coprime integers with the first nonzero
        entry positive; other backends divide by the first (significantly)
        nonzero coordinate.
        """
        xs = self.coords()
        if all(isinstance(c, (int, Fraction)) for c in xs):
            denom = lcm(*(Fraction(c).denominator for c in xs))
            ints = [int(Fraction(c) * denom) for c in xs]
            content = 0
            for v in ints:
                content = gcd(content, v)
            ints = [v // content for v in ints]
            for v in ints:
                if v != 0:
                    if v < 0:
                        ints = [-u for u in ints]
                    break
            return tuple(Fraction(v) for v in ints)
        if self.backend == "exact":
            pivot = next(c for c in xs if not (isinstance(c, (int, Fraction)) and c == 0))
            return tuple(c / pivot for c in xs)
        floats = [to_float(c) for c in xs]
        top = max(abs(c) for c in floats)
        floats = [c / top for c in floats]
        for c in floats:
            if abs(c) > 1e-12:
                if c < 0:
                    floats = [-u for u in floats]
                break
        return tuple(floats)

    def is_null(self, tol: float | None = None) -> bool:
        rep = self.rep
        if rep.backend == "float":
            coords = [to_float(c) for c in self.coords()]
            top = max(abs(c) for c in coords)
            unit = Quaternion(0.0, *(c / top for c in coords), rep.signature)
            return is_zero(inner_product(unit, unit), tol)
        return is_zero(inner_product(rep, rep), tol)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if self.signature is not other.signature:
            return False
        a, b = self.coords(), other.coords()
        if self.backend == "float" or other.backend == "float":
            a = [to_float(c) for c in a]
            b = [to_float(c) for c in b]
            a = [c / max(map(abs, a)) for c in a]
            b = [c / max(map(abs, b)) for c in b]
        # proportional iff all 2x2 minors vanish
        pairs = ((0, 1), (0, 2), (1, 2))
        return all(scalar_eq(a[i] * b[j], a[j] * b[i]) for i, j in pairs)

    __hash__ = None

    def to_float(self):
        return type(self)(self.rep.to_float())

    def __repr__(self):
        inner = ", ".join(scalars.format_scalar(c) for c in self.canonical_coords())
        return f"{type(self).__name__}({inner})"


class ProjPoint(_ProjElement):
    """Point of the projective plane, written [x] for a vectorial quaternion x."""


class ProjLine(_ProjElement):
    """Line of the projective plane; [u] contains [x] iff <u, x> = 0."""


def point(x, y, z, signature: Signature = Signature.SPLIT) -> ProjPoint:
    return ProjPoint(Quaternion(0, x, y, z, signature))


def line(x, y, z, signature: Signature = Signature.SPLIT) -> ProjLine:
    return ProjLine(Quaternion(0, x, y, z, signature))


def join(p: ProjPoint, q: ProjPoint, tol: float | None = None) -> ProjLine:
    """The line through two distinct points."""
    rep = cross_product(p.rep, q.rep)
    try:
        return ProjLine(rep, tol)
    except DegenerateError:
        raise DegenerateError(f"join of coincident points {p!r} and {q!r}") from None


def meet(l: ProjLine, m: ProjLine, tol: float | None = None) -> ProjPoint:
    """The intersection point of two distinct lines."""
    rep = cross_product(l.rep, m.rep)
    try:
        return ProjPoint(rep, tol)
    except DegenerateError:
        raise DegenerateError(f"meet of coincident lines {l!r} and {m!r}") from None


def incident(u: ProjLine, x: ProjPoint, tol: float | None = None) -> bool:
    value = inner_product(u.rep, x.rep)
    if u.backend == "float" or x.backend == "float":
        norm_u = max(abs(to_float(c)) for c in u.coords())
        norm_x = max(abs(to_float(c)) for c in x.coords())
        return is_zero(to_float(value) / (norm_u * norm_x), tol)
    return is_zero(value, tol)


def quadrance(a: ProjPoint, b: ProjPoint, tol: float | None = None):
    """``1 - <a,b>^2 / (<a,a><b,b>)``; defined for non-null points only."""
    aa = inner_product(a.rep, a.rep)
    bb = inner_product(b.rep, b.rep)
    if a.is_null(tol) or b.is_null(tol):
        raise NullPointError("quadrance is undefined for null points")
    ab = inner_product(a.rep, b.rep)
    return 1 - (ab * ab) / (aa * bb)


def reflect(mirror: ProjLine, x: ProjPoint, tol: float | None = None) -> ProjPoint:
    """Reflection in a non-null line (equivalently, in its pole): [x] -> [m x conj(m)]."""
    if mirror.is_null(tol):
        raise DegenerateError("cannot reflect in a null line")
    m = mirror.rep
    return ProjPoint(force_vectorial(m * x.rep * m.conjugate()), tol)


def rotate(h: Quaternion, x: ProjPoint, tol: float | None = None) -> ProjPoint:
    """The isometry [x] -> [h x conj(h)] for an invertible quaternion h."""
    if is_zero(h.norm(), tol):
        raise DegenerateError(f"rotation by a null quaternion {h}")
    return ProjPoint(force_vectorial(h * x.rep * h.conjugate()), tol)


def rotation_center(h: Quaternion, tol: float | None = None) -> ProjPoint:
    """The fixed point [h - conj(h)] of the rotation by h."""
    vec = h - h.conjugate()
    try:
        return ProjPoint(vec, tol)
    except DegenerateError:
        raise DegenerateError(f"real quaternion {h} acts as the identity; no center") from None


def collinear(a: ProjPoint, b: ProjPoint, c: ProjPoint, tol: float | None = None) -> bool:
    """True when the 3x3 determinant of the three representatives vanishes."""
    rows = [a.coords(), b.coords(), c.coords()]
    if any(p.backend == "float" for p in (a, b, c)):
        rows = [
            [to_float(v) / max(abs(to_float(u)) for u in row) for v in row] for row in rows
        ]
    det = (
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    )
    return is_zero(det, tol)


def midpoints(a: ProjPoint, b: ProjPoint, tol: float | None = None) -> tuple[ProjPoint, ...]:
    """Points M on the line ab with q(a, M) = q(M, b); zero, one, or two of them.

    Candidates are a + s*b with s^2 = <a,a>/<b,b>; only real, non-null
    candidates qualify.  Exact inputs stay exact (the square root may be an
    exact surd).
    """
    if a.signature is not b.signature:
        raise MismatchError("midpoints of points from different geometries")
    if a == b:
        raise DegenerateError("midpoints of coincident points")
    aa = inner_product(a.rep, a.rep)
    bb = inner_product(b.rep, b.rep)
    if is_zero(aa, tol) or is_zero(bb, tol):
        raise NullPointError("midpoints of null points are undefined")
    ratio = aa / bb
    if scalars.is_exact(ratio):
        if isinstance(ratio, SqrtExt):
            s = float(ratio) ** 0.5 if float(ratio) > 0 else None
            if s is not None:
                a, b = a.to_float(), b.to_float()
        else:
            s = exact_sqrt(ratio)
    else:
        s = ratio ** 0.5 if ratio > 0 else None
    if s is None:
        return ()
    out = []
    for sign in (1, -1):
        rep = a.rep + b.rep * (s * sign)
        try:
            candidate = ProjPoint(rep, tol)
        except DegenerateError:
            continue
        if candidate.is_null(tol):
            continue
        if scalar_eq(quadrance(a, candidate, tol), quadrance(candidate, b, tol), tol):
            out.append(candidate)
    out.sort(key=lambda p: tuple(map(to_float, p.canonical_coords())))
    return tuple(out)
