"""
Solving A + B z = 0 when B is a non-zero zero divisor.

Left multiplication by such a B has rank two, so the system is solved in the
least-squares sense on the two dominant singular directions and declared
consistent when the residual is negligible.  A consistent solution is then
moved along the kernel of B until only its real and i components remain.
"""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..algebra.coquaternion import Coquaternion, is_singular, mul_matrix
from ..config import DEFAULT_TOLERANCES, Tolerances
from ..constants import CoqRootsError

STRUCTURAL_RANK = 2


class PreconditionViolation(CoqRootsError):
    """
    Raised when the singular remainder solver receives a zero or an
    invertible B.
    """

    pass


@dataclass(frozen=True)
class Inconsistent:
    residual: float


@dataclass(frozen=True)
class NormalizedSolution:
    """Particular solution gamma0 + gamma1 i together with the kernel direction (k1, k2)."""

    gamma0: float
    gamma1: float
    k1: float
    k2: float
    residual: float = 0.0

    @property
    def gamma(self) -> Coquaternion:
        return Coquaternion(self.gamma0, self.gamma1, 0.0, 0.0)


def kernel_direction(B: Coquaternion):
    b0, b1, b2, b3 = B.as_tuple()
    scale = b0**2 + b1**2
    k1 = -(b0 * b2 + b1 * b3) / scale
    k2 = (b1 * b2 - b0 * b3) / scale
    return k1, k2


def solve_singular_remainder(
    A: Coquaternion, B: Coquaternion, tol: Tolerances = DEFAULT_TOLERANCES
) -> Union[Inconsistent, NormalizedSolution]:
    if B.norm() <= tol.zero_b:
        raise PreconditionViolation(f"B = {B} is zero")
    if not is_singular(B, tol):
        raise PreconditionViolation(f"B = {B} is invertible")

    matrix = mul_matrix(B)
    rhs = -A.as_array()
    u, s, vt = np.linalg.svd(matrix)
    delta = np.zeros(4)
    for idx in range(STRUCTURAL_RANK):
        delta += (u[:, idx] @ rhs) / s[idx] * vt[idx]
    residual = float(np.linalg.norm(matrix @ delta - rhs))
    if residual > tol.consistency * (1.0 + A.norm()):
        logging.debug(f"A + Bz = 0 inconsistent, residual {residual:.3e}")
        return Inconsistent(residual)

    k1, k2 = kernel_direction(B)
    d0, d1, d2, d3 = delta
    alpha = -k1 * d2 - k2 * d3
    beta = -k2 * d2 + k1 * d3
    solution = NormalizedSolution(
        gamma0=float(alpha + d0),
        gamma1=float(beta + d1),
        k1=float(k1),
        k2=float(k2),
        residual=residual,
    )
    logging.debug(f"particular solution {solution}")
    return solution
