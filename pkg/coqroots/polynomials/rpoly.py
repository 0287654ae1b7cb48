"""
Real-coefficient polynomials: arithmetic, evaluation and complex root
extraction with multiplicities.

Roots come from the eigenvalues of the balanced Frobenius companion matrix.
Multiple roots are only computed to O(eps^(1/m)) by the eigensolver, so
clusters are grown with a radius that widens with the candidate multiplicity
and are accepted only when the derivatives up to order m-1 vanish at the
cluster centre.  The centre (the mean of the raw eigenvalues, which is
accurate to first order) then gets one Newton step on p^(m-1).
"""

import logging
from dataclasses import dataclass
from math import factorial
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.linalg import matrix_balance

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..constants import CoqRootsError

Number = Union[float, complex]


class DegenerateInput(CoqRootsError):
    """
    Raised when roots are requested for a constant (or zero) polynomial.
    """

    pass


@dataclass(frozen=True)
class RealPolynomial:
    """Real polynomial, coefficients in ascending degree, trailing zeros trimmed."""

    coefficients: Tuple[float, ...]

    def __post_init__(self):
        values = [float(c) for c in self.coefficients]
        while values and values[-1] == 0.0:
            values.pop()
        object.__setattr__(self, "coefficients", tuple(values))

    @classmethod
    def from_array(cls, values: Iterable[float]) -> "RealPolynomial":
        return cls(tuple(float(v) for v in values))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> float:
        return self.coefficients[-1] if self.coefficients else 0.0

    def as_array(self) -> np.ndarray:
        return np.array(self.coefficients, dtype=float)

    def norm1(self) -> float:
        return float(np.sum(np.abs(self.as_array())))

    def monic(self) -> "RealPolynomial":
        if self.degree < 0:
            raise DegenerateInput("the zero polynomial has no monic form")
        return RealPolynomial.from_array(self.as_array() / self.leading)

    def derivative(self, order: int = 1) -> "RealPolynomial":
        if self.degree < order:
            return RealPolynomial(())
        return RealPolynomial.from_array(npoly.polyder(self.as_array(), order))

    def __call__(self, x: Number) -> Number:
        if not self.coefficients:
            return 0.0
        return npoly.polyval(x, self.as_array())

    def __mul__(self, other: "RealPolynomial") -> "RealPolynomial":
        return mul_real(self, other)

    def isclose(self, other: "RealPolynomial", rtol: float = 1e-10) -> bool:
        size = max(len(self.coefficients), len(other.coefficients))
        a = np.zeros(size)
        b = np.zeros(size)
        a[: len(self.coefficients)] = self.coefficients
        b[: len(other.coefficients)] = other.coefficients
        return bool(np.max(np.abs(a - b), initial=0.0) <= rtol * (1.0 + np.max(np.abs(a), initial=0.0)))


@dataclass(frozen=True)
class RootCluster:
    value: complex
    multiplicity: int
    is_real: bool


def mul_real(p: RealPolynomial, q: RealPolynomial) -> RealPolynomial:
    if p.degree < 0 or q.degree < 0:
        return RealPolynomial(())
    return RealPolynomial.from_array(np.convolve(p.as_array(), q.as_array()))


def divide_real(p: RealPolynomial, d: RealPolynomial) -> Tuple[RealPolynomial, RealPolynomial]:
    """Long division p = quotient * d + remainder."""
    if d.degree < 0:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.degree < d.degree:
        return RealPolynomial(()), p
    quotient, remainder = npoly.polydiv(p.as_array(), d.as_array())
    return RealPolynomial.from_array(quotient), RealPolynomial.from_array(remainder)


def poly_from_roots(clusters: Sequence[RootCluster], leading: float = 1.0) -> RealPolynomial:
    roots = [c.value for c in clusters for _ in range(c.multiplicity)]
    coefficients = np.real(npoly.polyfromroots(roots)) * leading
    return RealPolynomial.from_array(coefficients)


def companion_matrix(p: RealPolynomial) -> np.ndarray:
    coefficients = p.monic().as_array()
    n = p.degree
    matrix = np.zeros((n, n))
    matrix[1:, :-1] = np.eye(n - 1)
    matrix[:, -1] = -coefficients[:-1]
    return matrix


def _eigenvalues(p: RealPolynomial) -> np.ndarray:
    balanced, _ = matrix_balance(companion_matrix(p), permute=False)
    return np.linalg.eigvals(balanced)


def _polish(p: RealPolynomial, center: complex, multiplicity: int) -> complex:
    """One guarded Newton step on the derivative of order m-1, where an m-fold root is simple."""
    target = p.derivative(multiplicity - 1)
    value = target(center)
    slope = target.derivative()(center)
    if slope != 0:
        candidate = center - value / slope
        if abs(target(candidate)) < abs(value):
            return complex(candidate)
    return center


def _cluster_radius(size: int, center: complex, tol: Tolerances) -> float:
    return (1.0 + abs(center)) * max(tol.cluster, tol.cluster_root ** (1.0 / size))


def _multiplicity_consistent(
    p: RealPolynomial, point: complex, multiplicity: int, tol: Tolerances
) -> bool:
    """Derivatives of order below the multiplicity must vanish at the centre."""
    coefficients = p.as_array()
    for order in range(multiplicity):
        taylor = npoly.polyder(coefficients, order) / factorial(order)
        value = abs(npoly.polyval(point, taylor))
        scale = npoly.polyval(abs(point), np.abs(taylor))
        if value > tol.multiplicity * (1.0 + scale):
            return False
    return True


def _cluster_shape(members: Sequence[complex], tol: Tolerances) -> Tuple[complex, bool, float]:
    center = complex(sum(members) / len(members))
    radius = _cluster_radius(len(members), center, tol)
    # the conjugate partner falls inside the cluster, or a lone real member is present
    is_real = abs(center.imag) <= radius or len(members) % 2 == 1
    return center, is_real, radius


def _accept(p: RealPolynomial, members: Sequence[complex], tol: Tolerances) -> bool:
    center, is_real, radius = _cluster_shape(members, tol)
    if max(abs(m - center) for m in members) > radius:
        return False
    if len(members) <= 2:
        return True
    if is_real:
        return _multiplicity_consistent(p, complex(center.real, 0.0), len(members), tol)
    return _multiplicity_consistent(p, center, len(members) // 2, tol)


def _cluster(p: RealPolynomial, roots: Sequence[complex], tol: Tolerances) -> List[RootCluster]:
    # fold into the upper half plane: a conjugate pair becomes two coincident points
    remaining = sorted(
        (complex(r.real, abs(r.imag)) for r in roots), key=lambda z: (z.real, z.imag)
    )
    clusters: List[RootCluster] = []
    while remaining:
        seed = remaining[0]
        order = sorted(range(len(remaining)), key=lambda idx: abs(remaining[idx] - seed))
        distances = [abs(remaining[idx] - seed) for idx in order]
        chosen = order[:1]
        for size in range(len(order), 1, -1):
            reach = distances[size - 1]
            if reach > 2.0 * _cluster_radius(size, complex(abs(seed) + reach), tol):
                continue
            candidate = order[:size]
            if _accept(p, [remaining[idx] for idx in candidate], tol):
                chosen = candidate
                break
        members = [remaining[idx] for idx in chosen]
        center, is_real, _ = _cluster_shape(members, tol)
        if is_real:
            value = _polish(p, complex(center.real, 0.0), len(members))
            clusters.append(RootCluster(complex(value.real, 0.0), len(members), True))
        else:
            multiplicity = len(members) // 2
            value = _polish(p, center, multiplicity)
            clusters.append(RootCluster(value, multiplicity, False))
            clusters.append(RootCluster(value.conjugate(), multiplicity, False))
        taken = set(chosen)
        remaining = [z for idx, z in enumerate(remaining) if idx not in taken]
    return sorted(clusters, key=lambda c: (c.value.real, c.value.imag))


def root_residual_ok(p: RealPolynomial, value: complex, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """|p(value)| <= residual * (1 + |p|_1 |value|^degree)."""
    bound = tol.residual * (1.0 + p.norm1() * abs(value) ** p.degree)
    return bool(abs(p(value)) <= bound)


def real_roots(p: RealPolynomial, tol: Tolerances = DEFAULT_TOLERANCES) -> List[RootCluster]:
    if p.degree < 1:
        raise DegenerateInput(f"polynomial of degree {p.degree} has no roots to extract")
    monic = p.monic()
    eigenvalues = _eigenvalues(monic)
    logging.debug(f"companion eigenvalues: {np.array2string(eigenvalues, precision=12)}")
    clusters = _cluster(monic, [complex(e) for e in eigenvalues], tol)
    total = sum(c.multiplicity for c in clusters)
    if total != p.degree:
        logging.warning(f"root multiplicities add up to {total}, expected {p.degree}")
    for cluster in clusters:
        if not root_residual_ok(monic, cluster.value, tol):
            logging.warning(f"root {cluster.value:.10g} fails the residual check")
    logging.debug(
        "root clusters: "
        + ", ".join(f"{c.value:.10g} x{c.multiplicity}" for c in clusters)
    )
    return clusters
