"""Quaternion arithmetic for the Hamiltonian and split signatures.

A quaternion is ``w + x*i + y*j + z*k``.  The signature decides the squares of
the basis vectors:

* Hamiltonian: ``i^2 = j^2 = k^2 = -1``
* split:      ``i^2 = -1``, ``j^2 = k^2 = +1``

with ``ij = k = -ji``, ``ki = j = -ik`` in both, and ``jk = i``/``jk = -i`` in
the Hamiltonian/split case respectively.  Values are immutable; all operations
are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import scalars
from .errors import MismatchError, NonInvertibleError
from .scalars import SqrtExt, as_scalar, is_zero, scalar_eq


class Signature(Enum):
    HAMILTON = "hamilton"
    SPLIT = "split"

    @property
    def vector_square_signs(self) -> tuple[int, int, int]:
        """Squares of i, j, k as +-1."""
        if self is Signature.HAMILTON:
            return (-1, -1, -1)
        return (-1, 1, 1)


@dataclass(frozen=True)
class Quaternion:
    w: object
    x: object
    y: object
    z: object
    signature: Signature

    def __post_init__(self):
        object.__setattr__(self, "w", as_scalar(self.w))
        object.__setattr__(self, "x", as_scalar(self.x))
        object.__setattr__(self, "y", as_scalar(self.y))
        object.__setattr__(self, "z", as_scalar(self.z))
        if not isinstance(self.signature, Signature):
            raise MismatchError(f"not a Signature: {self.signature!r}")

    # -- construction ------------------------------------------------------

    @classmethod
    def real(cls, value, signature: Signature) -> "Quaternion":
        return cls(value, 0, 0, 0, signature)

    @classmethod
    def from_coords(cls, coords, signature: Signature) -> "Quaternion":
        w, x, y, z = coords
        return cls(w, x, y, z, signature)

    @classmethod
    def zero(cls, signature: Signature) -> "Quaternion":
        return cls(0, 0, 0, 0, signature)

    # -- inspection --------------------------------------------------------

    @property
    def coords(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    @property
    def backend(self) -> str:
        return "exact" if all(scalars.is_exact(c) for c in self.coords) else "float"

    def is_zero(self, tol: float | None = None) -> bool:
        return all(is_zero(c, tol) for c in self.coords)

    def is_real(self, tol: float | None = None) -> bool:
        return all(is_zero(c, tol) for c in (self.x, self.y, self.z))

    def is_vectorial(self, tol: float | None = None) -> bool:
        return is_zero(self.w, tol)

    def _strictly_zero(self) -> bool:
        return all(scalars.is_exact(c) and c == 0 for c in self.coords)

    def _check_compatible(self, other: "Quaternion"):
        if self.signature is not other.signature:
            raise MismatchError(
                f"signature mismatch: {self.signature.value} vs {other.signature.value}"
            )
        # an exact zero is backend-neutral (internal seeds and padding)
        if self.backend != other.backend and not (self._strictly_zero() or other._strictly_zero()):
            raise MismatchError(f"backend mismatch: {self.backend} vs {other.backend}")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check_compatible(other)
        return Quaternion(
            self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z, self.signature
        )

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z, self.signature)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, float, SqrtExt)):
            s = as_scalar(other)
            return Quaternion(self.w * s, self.x * s, self.y * s, self.z * s, self.signature)
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check_compatible(other)
        a0, a1, a2, a3 = self.coords
        b0, b1, b2, b3 = other.coords
        if self.signature is Signature.HAMILTON:
            return Quaternion(
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
                self.signature,
            )
        return Quaternion(
            a0 * b0 - a1 * b1 + a2 * b2 + a3 * b3,
            a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            self.signature,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, float, SqrtExt)):
            return self * other  # scalars are central
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, float, SqrtExt)):
            s = as_scalar(other)
            return Quaternion(self.w / s, self.x / s, self.y / s, self.z / s, self.signature)
        return NotImplemented

    # -- involutions and norm ------------------------------------------------

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z, self.signature)

    def norm(self):
        """The scalar ``h * conjugate(h)``."""
        sx, sy, sz = self.signature.vector_square_signs
        return (
            self.w * self.w
            - sx * self.x * self.x
            - sy * self.y * self.y
            - sz * self.z * self.z
        )

    def inverse(self, tol: float | None = None) -> "Quaternion":
        n = self.norm()
        if is_zero(n, tol):
            raise NonInvertibleError(f"quaternion has zero norm: {self}")
        return self.conjugate() / n

    def vector_part(self) -> "Quaternion":
        return Quaternion(0 if scalars.is_exact(self.w) else 0.0, self.x, self.y, self.z, self.signature)

    # -- comparisons and conversions ------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        if self.signature is not other.signature:
            return False
        return all(scalar_eq(a, b) for a, b in zip(self.coords, other.coords))

    def approx_eq(self, other: "Quaternion", tol: float | None = None) -> bool:
        return self.signature is other.signature and all(
            scalar_eq(a, b, tol) for a, b in zip(self.coords, other.coords)
        )

    def __hash__(self):
        return hash((self.coords, self.signature))

    def to_float(self) -> "Quaternion":
        return Quaternion(*(scalars.to_float(c) for c in self.coords), self.signature)

    def __str__(self):
        return quaternion_str(self)

    def __repr__(self):
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r}, {self.signature})"


def quaternion_str(q: Quaternion) -> str:
    """Canonical text form, e.g. ``1 - 3/5j + 4/5k``."""
    parts: list[str] = []
    for coeff, unit in zip(q.coords, ("", "i", "j", "k")):
        if scalars.is_exact(coeff) and coeff == 0:
            continue
        text = scalars.format_scalar(coeff)
        if unit and isinstance(coeff, SqrtExt):
            text = f"({text})"
        if unit and text == "1":
            text = ""
        elif unit and text == "-1":
            text = "-"
        body = f"{text}{unit}" if unit else text
        if not parts:
            parts.append(body)
        elif body.startswith("-"):
            parts.append(f"- {body[1:]}")
        else:
            parts.append(f"+ {body}")
    if not parts:
        return "0"
    return " ".join(parts)


def basis(signature: Signature) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
    """The basis quaternions (1, i, j, k) for a signature."""
    return (
        Quaternion(1, 0, 0, 0, signature),
        Quaternion(0, 1, 0, 0, signature),
        Quaternion(0, 0, 1, 0, signature),
        Quaternion(0, 0, 0, 1, signature),
    )
