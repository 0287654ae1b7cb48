"""
Left-unilateral polynomials with coquaternion coefficients.

P(x) = c_n x^n + ... + c_1 x + c_0 with the coefficients written on the left of
the powers of the variable.  Multiplication treats x as commuting with the
coefficients, while evaluation substitutes q on the right of each coefficient,
so evaluation is not a ring homomorphism.
"""

import logging
import numbers
from dataclasses import dataclass
from typing import Iterable, Protocol, Sequence, Tuple, Union

from ..algebra.coquaternion import (
    ONE,
    ZERO,
    ClassRep,
    ClassType,
    Coquaternion,
    classify_dv,
    determinant,
    inverse,
    is_singular,
    representative_of,
)
from ..config import DEFAULT_TOLERANCES, Tolerances
from ..constants import CoqRootsError
from .rpoly import RealPolynomial

Scalar = Union[int, float, Coquaternion]


class NonRealCompanion(CoqRootsError):
    """
    Raised when the conjugate product of a polynomial with itself carries a
    non-negligible vector part.  This never happens in exact arithmetic.
    """

    pass


class SingularLeadingCoefficient(CoqRootsError):
    """
    Raised when the leading coefficient is a zero divisor, so the polynomial
    cannot be made monic.
    """

    pass


class QuasiSimilarityClass(Protocol):
    q0: float
    dv: float


def _as_coquaternion(value: Scalar) -> Coquaternion:
    if isinstance(value, Coquaternion):
        return value
    return Coquaternion.from_real(value)


@dataclass(frozen=True)
class CoqPolynomial:
    """Coefficients c_0 ... c_n in ascending degree; the zero polynomial is empty."""

    coefficients: Tuple[Coquaternion, ...]

    def __post_init__(self):
        values = [_as_coquaternion(c) for c in self.coefficients]
        while values and values[-1] == ZERO:
            values.pop()
        object.__setattr__(self, "coefficients", tuple(values))

    @classmethod
    def from_tuples(cls, rows: Iterable[Sequence[float]]) -> "CoqPolynomial":
        return cls(tuple(Coquaternion.from_array(row) for row in rows))

    @classmethod
    def from_real(cls, values: Iterable[float]) -> "CoqPolynomial":
        return cls(tuple(Coquaternion.from_real(v) for v in values))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Coquaternion:
        return self.coefficients[-1] if self.coefficients else ZERO

    @property
    def is_monic(self) -> bool:
        return self.leading == ONE

    def coefficient(self, k: int) -> Coquaternion:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else ZERO

    def norm(self) -> float:
        return max((c.norm() for c in self.coefficients), default=0.0)

    def isclose(self, other: "CoqPolynomial", tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
        size = max(len(self.coefficients), len(other.coefficients))
        gap = max(
            ((self.coefficient(k) - other.coefficient(k)).norm() for k in range(size)),
            default=0.0,
        )
        return gap <= tol.poly * (1.0 + max(self.norm(), other.norm()))

    def __call__(self, q: Coquaternion) -> Coquaternion:
        return evaluate(self, q)

    def __add__(self, other):
        if isinstance(other, (Coquaternion, numbers.Real)):
            other = CoqPolynomial((_as_coquaternion(other),))
        if not isinstance(other, CoqPolynomial):
            return NotImplemented
        size = max(len(self.coefficients), len(other.coefficients))
        return CoqPolynomial(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(size))
        )

    __radd__ = __add__

    def __neg__(self) -> "CoqPolynomial":
        return CoqPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        if isinstance(other, (CoqPolynomial, Coquaternion, numbers.Real)):
            return self + (-other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (Coquaternion, numbers.Real)):
            other = CoqPolynomial((_as_coquaternion(other),))
        if not isinstance(other, CoqPolynomial):
            return NotImplemented
        return poly_multiply(self, other)

    def __rmul__(self, other):
        # scalar on the left multiplies every coefficient on the left
        if isinstance(other, (Coquaternion, numbers.Real)):
            scalar = _as_coquaternion(other)
            return CoqPolynomial(tuple(scalar * c for c in self.coefficients))
        return NotImplemented

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == ZERO:
                continue
            power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append(f"({c}){power}")
        return " + ".join(terms)


ZERO_POLY = CoqPolynomial(())
X = CoqPolynomial((ZERO, ONE))


@dataclass(frozen=True)
class CharPoly:
    """The real monic quadratic x^2 - re2 x + det."""

    re2: float
    det: float

    @classmethod
    def from_coquaternion(cls, q: Coquaternion) -> "CharPoly":
        return cls(2.0 * q.q0, determinant(q))

    @property
    def discriminant(self) -> float:
        return self.re2**2 - 4.0 * self.det

    def as_real(self) -> RealPolynomial:
        return RealPolynomial((self.det, -self.re2, 1.0))

    def as_coq(self) -> CoqPolynomial:
        return CoqPolynomial.from_real((self.det, -self.re2, 1.0))

    def __call__(self, z: Coquaternion) -> Coquaternion:
        return z * z - z * self.re2 + self.det


@dataclass(frozen=True)
class LinearRemainder:
    A: Coquaternion
    B: Coquaternion

    def at(self, z: Coquaternion) -> Coquaternion:
        """Value of the remainder A + B z, equal to P(z) on the dividing class."""
        return self.A + self.B * z


def poly_multiply(P: CoqPolynomial, Q: CoqPolynomial) -> CoqPolynomial:
    if P.degree < 0 or Q.degree < 0:
        return ZERO_POLY
    product = [ZERO] * (P.degree + Q.degree + 1)
    for i, p in enumerate(P.coefficients):
        for j, q in enumerate(Q.coefficients):
            product[i + j] = product[i + j] + p * q
    return CoqPolynomial(tuple(product))


def evaluate(P: CoqPolynomial, q: Coquaternion) -> Coquaternion:
    # Horner with q on the right: ((c_n q + c_{n-1}) q + ...) q + c_0
    acc = ZERO
    for c in reversed(P.coefficients):
        acc = acc * q + c
    return acc


def conjugate_poly(P: CoqPolynomial) -> CoqPolynomial:
    return CoqPolynomial(tuple(c.conjugate() for c in P.coefficients))


def companion(P: CoqPolynomial, tol: Tolerances = DEFAULT_TOLERANCES) -> RealPolynomial:
    """The real polynomial conj(P) * P of degree 2n."""
    product = poly_multiply(conjugate_poly(P), P)
    drift = max((c.vec.norm() for c in product.coefficients), default=0.0)
    if drift > tol.poly * (1.0 + product.norm()):
        raise NonRealCompanion(
            f"companion coefficients carry a vector part of size {drift:.3e}"
        )
    result = RealPolynomial(tuple(c.q0 for c in product.coefficients))
    logging.debug(f"companion polynomial coefficients: {result.coefficients}")
    return result


def monicize(P: CoqPolynomial, tol: Tolerances = DEFAULT_TOLERANCES) -> CoqPolynomial:
    if P.degree < 0:
        raise SingularLeadingCoefficient("the zero polynomial has no leading coefficient")
    if P.is_monic:
        return P
    lead = P.leading
    if is_singular(lead, tol):
        raise SingularLeadingCoefficient(
            f"leading coefficient {lead} has determinant {determinant(lead):.3e}"
        )
    scale = inverse(lead, tol)
    coefficients = [scale * c for c in P.coefficients[:-1]]
    return CoqPolynomial(tuple(coefficients) + (ONE,))


def char_poly_of(klass: QuasiSimilarityClass) -> CharPoly:
    return CharPoly(2.0 * klass.q0, klass.q0**2 + klass.dv)


def class_of_char_poly(
    re2: float, det: float, tol: Tolerances = DEFAULT_TOLERANCES
) -> ClassRep:
    """The unique quasi-similarity class whose characteristic polynomial is x^2 - re2 x + det."""
    q0 = re2 / 2.0
    dv = det - q0**2
    type_tag = classify_dv(dv, abs(q0), tol)
    if type_tag is ClassType.TYPE3:
        dv = 0.0
    return ClassRep(q0, dv, type_tag, representative_of(q0, dv, type_tag))


def divide_by_char(
    P: CoqPolynomial, psi: CharPoly
) -> Tuple[CoqPolynomial, LinearRemainder]:
    """
    Divide P by the real quadratic psi: P = Q psi + B x + A.

    The quotient coefficients alpha_k satisfy the backward recurrence
    alpha_{n-1} = 0, alpha_{n-2} = c_n and
    alpha_k = c_{k+2} + re2 alpha_{k+1} - det alpha_{k+2}.
    """
    n = P.degree
    if n < 2:
        return ZERO_POLY, LinearRemainder(P.coefficient(0), P.coefficient(1))
    alpha = [ZERO] * n
    alpha[n - 2] = P.coefficient(n)
    for k in range(n - 3, -1, -1):
        alpha[k] = P.coefficient(k + 2) + alpha[k + 1] * psi.re2 - alpha[k + 2] * psi.det
    A = P.coefficient(0) - alpha[0] * psi.det
    B = P.coefficient(1) + alpha[0] * psi.re2 - alpha[1] * psi.det
    return CoqPolynomial(tuple(alpha)), LinearRemainder(A, B)


def divide_by_linear(
    P: CoqPolynomial, z: Coquaternion
) -> Tuple[CoqPolynomial, Coquaternion]:
    """Right division P = Q (x - z) + R; the remainder R equals P(z)."""
    if P.degree < 1:
        return ZERO_POLY, P.coefficient(0)
    quotient = [ZERO] * P.degree
    acc = ZERO
    for k in range(P.degree, 0, -1):
        acc = acc * z + P.coefficient(k)
        quotient[k - 1] = acc
    remainder = acc * z + P.coefficient(0)
    return CoqPolynomial(tuple(quotient)), remainder


def from_linear_factors(zs: Sequence[Coquaternion]) -> CoqPolynomial:
    """(x - z_1)(x - z_2)...(x - z_m); z_m is always a zero of the product."""
    result = CoqPolynomial((ONE,))
    for z in zs:
        result = poly_multiply(result, CoqPolynomial((-z, ONE)))
    return result
