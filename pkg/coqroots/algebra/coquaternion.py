"""
The algebra of real coquaternions (split quaternions).

Elements are q0 + q1 i + q2 j + q3 k with i^2 = -1, j^2 = k^2 = 1 and
ij = -ji = k.  The algebra is not a division algebra: q is invertible exactly
when its determinant q0^2 + q1^2 - q2^2 - q3^2 is non-zero.
"""

import logging
import math
import numbers
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Tuple, Union

import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..constants import CoqRootsError

Scalar = Union[int, float]


class SingularElement(CoqRootsError):
    """
    Raised when inverting a coquaternion whose determinant vanishes (a zero divisor).
    """

    pass


@dataclass(frozen=True)
class Coquaternion:
    q0: float = 0.0
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0

    def __post_init__(self):
        # frozen, so coerce through object.__setattr__
        for name in ("q0", "q1", "q2", "q3"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @classmethod
    def from_real(cls, value: Scalar) -> "Coquaternion":
        return cls(float(value), 0.0, 0.0, 0.0)

    @classmethod
    def from_array(cls, values: Iterable[float]) -> "Coquaternion":
        q0, q1, q2, q3 = (float(v) for v in values)
        return cls(q0, q1, q2, q3)

    def as_array(self) -> np.ndarray:
        return np.array([self.q0, self.q1, self.q2, self.q3], dtype=float)

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.q0, self.q1, self.q2, self.q3)

    @property
    def re(self) -> float:
        return self.q0

    @property
    def vec(self) -> "Coquaternion":
        return Coquaternion(0.0, self.q1, self.q2, self.q3)

    def conjugate(self) -> "Coquaternion":
        return Coquaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def norm(self) -> float:
        """Euclidean norm of the 4-vector; the determinant is indefinite."""
        return math.sqrt(self.q0**2 + self.q1**2 + self.q2**2 + self.q3**2)

    def is_real(self, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
        return self.vec.norm() <= tol.type_split * (1.0 + self.norm())

    def isclose(self, other: "Coquaternion", atol: float = 1e-12) -> bool:
        return (self - other).norm() <= atol

    def __add__(self, other):
        if isinstance(other, Coquaternion):
            return Coquaternion(
                self.q0 + other.q0,
                self.q1 + other.q1,
                self.q2 + other.q2,
                self.q3 + other.q3,
            )
        if isinstance(other, numbers.Real):
            return Coquaternion(self.q0 + other, self.q1, self.q2, self.q3)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "Coquaternion":
        return Coquaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __sub__(self, other):
        if isinstance(other, (Coquaternion, numbers.Real)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, numbers.Real):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Coquaternion):
            return multiply(self, other)
        if isinstance(other, numbers.Real):
            return Coquaternion(
                self.q0 * other, self.q1 * other, self.q2 * other, self.q3 * other
            )
        return NotImplemented

    def __rmul__(self, other):
        # reals are central
        if isinstance(other, numbers.Real):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Real):
            return Coquaternion(
                self.q0 / other, self.q1 / other, self.q2 / other, self.q3 / other
            )
        return NotImplemented

    def __str__(self) -> str:
        parts = [_format_real(self.q0)]
        for value, unit in ((self.q1, "i"), (self.q2, "j"), (self.q3, "k")):
            sign = "-" if value < 0 else "+"
            parts.append(f"{sign} {_format_real(abs(value))}{unit}")
        return " ".join(parts)


def _format_real(value: float) -> str:
    # repr-style shortest form; never locale dependent
    text = f"{value:.12g}"
    return "0" if text == "-0" else text


ZERO = Coquaternion(0.0, 0.0, 0.0, 0.0)
ONE = Coquaternion(1.0, 0.0, 0.0, 0.0)
I = Coquaternion(0.0, 1.0, 0.0, 0.0)
J = Coquaternion(0.0, 0.0, 1.0, 0.0)
K = Coquaternion(0.0, 0.0, 0.0, 1.0)


class ClassType(Enum):
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    TYPE3 = "Type3"

    @property
    def surface(self) -> str:
        """Shape of the quasi-similarity class inside the hyperplane x0 = q0."""
        return {
            ClassType.TYPE1: "hyperboloid of two sheets",
            ClassType.TYPE2: "hyperboloid of one sheet",
            ClassType.TYPE3: "cone",
        }[self]


@dataclass(frozen=True)
class ClassRep:
    q0: float
    dv: float
    type_tag: ClassType
    representative: Coquaternion
    witness: Optional[Coquaternion] = None


def multiply(p: Coquaternion, q: Coquaternion) -> Coquaternion:
    return Coquaternion(
        p.q0 * q.q0 - p.q1 * q.q1 + p.q2 * q.q2 + p.q3 * q.q3,
        p.q0 * q.q1 + p.q1 * q.q0 - p.q2 * q.q3 + p.q3 * q.q2,
        p.q0 * q.q2 - p.q1 * q.q3 + p.q2 * q.q0 + p.q3 * q.q1,
        p.q0 * q.q3 + p.q1 * q.q2 - p.q2 * q.q1 + p.q3 * q.q0,
    )


def conjugate(q: Coquaternion) -> Coquaternion:
    return q.conjugate()


def determinant(q: Coquaternion) -> float:
    return q.q0**2 + q.q1**2 - q.q2**2 - q.q3**2


def vector_determinant(q: Coquaternion) -> float:
    return q.q1**2 - q.q2**2 - q.q3**2


def is_singular(q: Coquaternion, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    return abs(determinant(q)) <= tol.singular * (1.0 + q.norm() ** 2)


def inverse(q: Coquaternion, tol: Tolerances = DEFAULT_TOLERANCES) -> Coquaternion:
    if is_singular(q, tol):
        raise SingularElement(f"{q} has determinant {determinant(q):.3e} and is not invertible")
    return q.conjugate() / determinant(q)


def mul_matrix(p: Coquaternion) -> np.ndarray:
    """Matrix M_p with M_p @ q.as_array() == (p * q).as_array()."""
    p0, p1, p2, p3 = p.as_tuple()
    return np.array(
        [
            [p0, -p1, p2, p3],
            [p1, p0, p3, -p2],
            [p2, p3, p0, -p1],
            [p3, -p2, p1, p0],
        ],
        dtype=float,
    )


def as_real_matrix(q: Coquaternion) -> np.ndarray:
    """2x2 real matrix representation; its determinant is determinant(q)."""
    return np.array(
        [[q.q0 + q.q3, q.q1 + q.q2], [q.q2 - q.q1, q.q0 - q.q3]], dtype=float
    )


def classify(q: Coquaternion, tol: Tolerances = DEFAULT_TOLERANCES) -> ClassType:
    return classify_dv(vector_determinant(q), q.norm(), tol)


def classify_dv(dv: float, magnitude: float = 0.0, tol: Tolerances = DEFAULT_TOLERANCES) -> ClassType:
    if abs(dv) <= tol.type_split * (1.0 + magnitude**2):
        return ClassType.TYPE3
    return ClassType.TYPE1 if dv > 0 else ClassType.TYPE2


def representative_of(q0: float, dv: float, type_tag: ClassType, real: bool = False) -> Coquaternion:
    """Canonical representative of the class with real part q0 and vector determinant dv."""
    if type_tag is ClassType.TYPE1:
        return Coquaternion(q0, math.sqrt(dv), 0.0, 0.0)
    if type_tag is ClassType.TYPE2:
        return Coquaternion(q0, 0.0, math.sqrt(-dv), 0.0)
    return Coquaternion(q0) if real else Coquaternion(q0, 1.0, 1.0, 0.0)


def canonicalize(q: Coquaternion, tol: Tolerances = DEFAULT_TOLERANCES) -> ClassRep:
    q0, q1, q2, q3 = q.as_tuple()
    dv = vector_determinant(q)
    type_tag = classify(q, tol)
    if q.is_real(tol):
        return ClassRep(q0, 0.0, ClassType.TYPE3, Coquaternion(q0))

    # j q j = q0 - q1 i + q2 j - q3 k; when the direct witness would be near
    # singular, take the witness h' of j q j and use j h'.
    if type_tag is ClassType.TYPE1:
        s = math.sqrt(dv)
        if q1 > 0:
            # det = 2 s (s + q1)
            witness = Coquaternion(q1 + s, 0.0, -q3, q2)
        else:
            witness = J * Coquaternion(s - q1, 0.0, q3, q2)
    elif type_tag is ClassType.TYPE2:
        s = math.sqrt(-dv)
        if q1**2 + q3**2 != 0 or q2 > 0:
            if q2 <= 0:
                witness = Coquaternion(q1, 0.0, -q3, q2 - s)
            else:
                witness = Coquaternion(q2 + s, q3, 0.0, q1)
        else:
            witness = I
    else:
        dv = 0.0
        # det = 2 (q1 + q2), and 2 (q2 - q1) after conjugating by j
        if q1 * q2 >= 0:
            witness = Coquaternion(1.0 + q1, 0.0, -q3, -(1.0 - q2))
        else:
            witness = J * Coquaternion(1.0 - q1, 0.0, q3, -(1.0 - q2))

    logging.debug(f"canonicalize {q}: {type_tag.value}, dv={dv:.6g}, witness {witness}")
    return ClassRep(q0, dv, type_tag, representative_of(q0, dv, type_tag), witness)


def quasi_similar(p: Coquaternion, q: Coquaternion, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    scale = 1.0 + max(p.norm(), q.norm()) ** 2
    same_re = abs(p.re - q.re) <= tol.type_split * scale
    same_dv = abs(vector_determinant(p) - vector_determinant(q)) <= tol.type_split * scale
    return same_re and same_dv


def similar(p: Coquaternion, q: Coquaternion, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """True similarity: a real number is similar only to itself."""
    if not quasi_similar(p, q, tol):
        return False
    p_real, q_real = p.is_real(tol), q.is_real(tol)
    if p_real or q_real:
        return p_real and q_real
    return True
