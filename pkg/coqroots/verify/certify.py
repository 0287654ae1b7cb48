"""
Independent certification of a root report.

Every reported zero is substituted back into the polynomial: isolated zeros
directly, lines at a fixed set of parameters and hyperboloidal classes at
sampled points.  Each zero must also sit in its class, and the characteristic
polynomial of its class must divide the companion polynomial (its square,
for a hyperboloidal zero).
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..algebra.coquaternion import Coquaternion, vector_determinant
from ..constants import (
    DEFAULT_BETAS,
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_SEED,
    REFERENCE_TOLERANCE,
)
from ..polynomials.cqpoly import CharPoly, CoqPolynomial, char_poly_of, evaluate
from ..polynomials.rpoly import RealPolynomial, divide_real
from ..rootfinder.report import RootReport
from ..rootfinder.zeros import MEMBERSHIP_TOLERANCE, ZeroDescriptor, ZeroKind
from .sampling import sample_class, sample_line


@dataclass(frozen=True)
class DescriptorCheck:
    index: int
    kind: ZeroKind
    worst_residual: float
    passed: bool
    messages: Tuple[str, ...] = ()


@dataclass(frozen=True)
class CertificationResult:
    checks: Tuple[DescriptorCheck, ...]
    tolerance: float

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def worst_residual(self) -> float:
        return max((check.worst_residual for check in self.checks), default=0.0)

    @property
    def failures(self) -> List[DescriptorCheck]:
        return [check for check in self.checks if not check.passed]


def residual(P: CoqPolynomial, z: Coquaternion) -> float:
    """|P(z)| relative to 1 + sum |c_i| |z|^i."""
    size = z.norm()
    scale = 1.0 + sum(c.norm() * size**i for i, c in enumerate(P.coefficients))
    return evaluate(P, z).norm() / scale


def _divisor_gap(dividend: RealPolynomial, divisor: RealPolynomial) -> float:
    _, remainder = divide_real(dividend, divisor)
    gap = float(np.max(np.abs(remainder.as_array()), initial=0.0))
    return gap / (1.0 + dividend.norm1())


class _Checker:
    def __init__(self, report: RootReport, tolerance: float):
        self.report = report
        self.tolerance = tolerance
        self.worst = 0.0
        self.messages: List[str] = []

    def zero(self, z: Coquaternion, where: str) -> None:
        value = residual(self.report.polynomial, z)
        self.worst = max(self.worst, value)
        if value > self.tolerance:
            self.messages.append(f"residual {value:.3e} at {where} {z}")

    def membership(self, z: Coquaternion, descriptor: ZeroDescriptor) -> None:
        klass = descriptor.klass
        scale = self.tolerance * (1.0 + z.norm() ** 2)
        if abs(z.q0 - klass.q0) > scale or abs(vector_determinant(z) - klass.dv) > scale:
            self.messages.append(f"{z} lies outside the class {klass}")

    def divides(self, psi: RealPolynomial, what: str) -> None:
        gap = _divisor_gap(self.report.companion, psi)
        if gap > self.tolerance:
            self.messages.append(f"{what} leaves a companion remainder of {gap:.3e}")


def check_descriptor(
    report: RootReport,
    index: int,
    descriptor: ZeroDescriptor,
    tolerance: float = REFERENCE_TOLERANCE,
    count: int = DEFAULT_SAMPLE_COUNT,
    betas: Sequence[float] = DEFAULT_BETAS,
    seed: int = DEFAULT_SEED,
) -> DescriptorCheck:
    checker = _Checker(report, tolerance)
    if descriptor.kind is ZeroKind.ISOLATED and descriptor.zero is not None:
        checker.zero(descriptor.zero, "isolated zero")
        checker.membership(descriptor.zero, descriptor)
        checker.divides(CharPoly.from_coquaternion(descriptor.zero).as_real(), "its class")
    elif descriptor.kind is ZeroKind.LINEAR:
        for point in sample_line(descriptor, betas):
            checker.zero(point, "line point")
            checker.membership(point, descriptor)
        checker.divides(char_poly_of(descriptor.klass).as_real(), "its class")
    elif descriptor.kind is ZeroKind.HYPERBOLOIDAL:
        for point in sample_class(descriptor.klass, count, seed).points:
            checker.zero(point, "class point")
        psi = char_poly_of(descriptor.klass).as_real()
        checker.divides(psi * psi, "the squared class polynomial")
    passed = not checker.messages
    for message in checker.messages:
        logging.warning(f"descriptor {index} ({descriptor.klass}): {message}")
    return DescriptorCheck(index, descriptor.kind, checker.worst, passed, tuple(checker.messages))


def certify(
    report: RootReport,
    tolerance: float = REFERENCE_TOLERANCE,
    count: int = DEFAULT_SAMPLE_COUNT,
    betas: Sequence[float] = DEFAULT_BETAS,
    seed: int = DEFAULT_SEED,
) -> CertificationResult:
    checks = tuple(
        check_descriptor(report, index, descriptor, tolerance, count, betas, seed)
        for index, descriptor in enumerate(report.classes)
    )
    result = CertificationResult(checks, tolerance)
    logging.info(
        f"certification {'passed' if result.passed else 'failed'}, worst residual {result.worst_residual:.3e}"
    )
    return result


def locate_zero(
    report: RootReport, z: Coquaternion, tol: float = MEMBERSHIP_TOLERANCE
) -> Optional[ZeroDescriptor]:
    """The descriptor whose zero set contains z, if any."""
    for descriptor in report.classes:
        if descriptor.contains(z, tol):
            return descriptor
    return None
