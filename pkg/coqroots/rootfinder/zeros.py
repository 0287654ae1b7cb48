"""
Zeros of a monic polynomial inside one admissible class.

Dividing P by the characteristic polynomial of the class leaves A + B x, and
z in the class is a zero exactly when A + B z = 0.  The outcome depends on B:
invertible (one isolated zero), zero (nothing or the whole class) or a
non-zero zero divisor (nothing, a line of zeros, or one isolated zero).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from ..algebra.coquaternion import (
    ClassType,
    Coquaternion,
    determinant,
    vector_determinant,
)
from ..config import DEFAULT_TOLERANCES, Tolerances
from ..polynomials.cqpoly import CoqPolynomial, char_poly_of, divide_by_char
from .classes import AdmissibleClass
from .remainder import Inconsistent, solve_singular_remainder

NEAR_THRESHOLD_FACTOR = 10.0
MEMBERSHIP_TOLERANCE = 1e-7


class ZeroKind(Enum):
    EMPTY = "Empty"
    ISOLATED = "Isolated"
    LINEAR = "Linear"
    HYPERBOLOIDAL = "Hyperboloidal"


class Branch(Enum):
    INVERTIBLE_B = "1"
    ZERO_B_NONZERO_A = "2a"
    ZERO_B_ZERO_A = "2b"
    INCONSISTENT = "3a"
    REAL_GAMMA_LINE = "3b-i"
    REAL_GAMMA_EMPTY = "3b-ii"
    NONREAL_GAMMA = "3c"


@dataclass(frozen=True)
class ZeroLine:
    """The points q0 + b i + (k2 b + k1 h) j + (-k1 b + k2 h) k, with h = q0 - gamma0."""

    q0: float
    gamma0: float
    k1: float
    k2: float

    def point(self, beta: float) -> Coquaternion:
        h = self.q0 - self.gamma0
        return Coquaternion(
            self.q0,
            beta,
            self.k2 * beta + self.k1 * h,
            -self.k1 * beta + self.k2 * h,
        )

    def contains(self, z: Coquaternion, tol: float = MEMBERSHIP_TOLERANCE) -> bool:
        if abs(z.q0 - self.q0) > tol * (1.0 + abs(self.q0)):
            return False
        # the i component is the line parameter
        return (z - self.point(z.q1)).norm() <= tol * (1.0 + z.norm())


@dataclass(frozen=True)
class ZeroDescriptor:
    klass: AdmissibleClass
    kind: ZeroKind
    branch: Branch
    A: Coquaternion
    B: Coquaternion
    det_b: float
    zero: Optional[Coquaternion] = None
    line: Optional[ZeroLine] = None
    notes: Tuple[str, ...] = ()

    def contains(self, z: Coquaternion, tol: float = MEMBERSHIP_TOLERANCE) -> bool:
        """Whether z belongs to the zero set this descriptor reports."""
        if self.kind is ZeroKind.ISOLATED and self.zero is not None:
            return (z - self.zero).norm() <= tol * (1.0 + self.zero.norm())
        if self.kind is ZeroKind.LINEAR and self.line is not None:
            return self.line.contains(z, tol)
        if self.kind is ZeroKind.HYPERBOLOIDAL:
            same_re = abs(z.q0 - self.klass.q0) <= tol * (1.0 + abs(self.klass.q0))
            same_dv = abs(vector_determinant(z) - self.klass.dv) <= tol * (1.0 + z.norm() ** 2)
            return same_re and same_dv
        return False


def _below(name: str, value: float, threshold: float, notes: List[str]) -> bool:
    if threshold / NEAR_THRESHOLD_FACTOR < value <= threshold * NEAR_THRESHOLD_FACTOR:
        note = (
            f"{name} = {value:.3e} is within a factor {NEAR_THRESHOLD_FACTOR:g}"
            f" of its threshold {threshold:.3e}"
        )
        logging.warning(note)
        notes.append(note)
    return value <= threshold


def zeros_in_class(
    P: CoqPolynomial, klass: AdmissibleClass, tol: Tolerances = DEFAULT_TOLERANCES
) -> ZeroDescriptor:
    _, remainder = divide_by_char(P, char_poly_of(klass))
    A, B = remainder.A, remainder.B
    det_b = determinant(B)
    notes: List[str] = []
    logging.debug(f"class {klass}: A = {A}, B = {B}, det(B) = {det_b:.6g}")

    def describe(kind: ZeroKind, branch: Branch, **found) -> ZeroDescriptor:
        logging.debug(f"class {klass}: branch {branch.value}, {kind.value}")
        return ZeroDescriptor(klass, kind, branch, A, B, det_b, notes=tuple(notes), **found)

    scale = 1.0 + P.norm()
    if _below("|B|", B.norm(), tol.zero_b * scale, notes):
        if _below("|A|", A.norm(), tol.zero_b * scale, notes):
            return describe(ZeroKind.HYPERBOLOIDAL, Branch.ZERO_B_ZERO_A)
        return describe(ZeroKind.EMPTY, Branch.ZERO_B_NONZERO_A)

    if not _below("|det(B)|", abs(det_b), tol.singular * (1.0 + B.norm() ** 2), notes):
        zero = -(B.conjugate() * A) / det_b
        return describe(ZeroKind.ISOLATED, Branch.INVERTIBLE_B, zero=zero)

    solution = solve_singular_remainder(A, B, tol)
    if isinstance(solution, Inconsistent):
        return describe(ZeroKind.EMPTY, Branch.INCONSISTENT)

    q0, dv = klass.q0, klass.dv
    shift = q0 - solution.gamma0
    k1, k2 = solution.k1, solution.k2
    if abs(solution.gamma1) <= tol.zero_b:
        if solution.gamma1 != 0.0:
            note = f"gamma1 = {solution.gamma1:.3e} treated as real"
            logging.warning(note)
            notes.append(note)
        on_line = _below(
            "|(q0 - gamma0)^2 + dv|", abs(shift**2 + dv), tol.linear * (1.0 + q0**2 + abs(dv)), notes
        )
        if on_line and klass.type_tag is ClassType.TYPE1:
            note = "line condition met on a Type1 class, which holds no linear zeros"
            logging.warning(note)
            notes.append(note)
            on_line = False
        if on_line:
            line = ZeroLine(q0, solution.gamma0, k1, k2)
            return describe(ZeroKind.LINEAR, Branch.REAL_GAMMA_LINE, line=line)
        return describe(ZeroKind.EMPTY, Branch.REAL_GAMMA_EMPTY)

    gamma1 = solution.gamma1
    beta = (dv + shift**2 - gamma1**2) / (2.0 * gamma1)
    zero = Coquaternion(
        q0,
        beta + gamma1,
        k2 * beta + k1 * shift,
        -k1 * beta + k2 * shift,
    )
    return describe(ZeroKind.ISOLATED, Branch.NONREAL_GAMMA, zero=zero)
