"""Worked example polynomials, coefficients in ascending degree."""

import math

from coqroots.algebra.coquaternion import Coquaternion
from coqroots.polynomials.cqpoly import CoqPolynomial, poly_multiply

SQRT2 = math.sqrt(2.0)

# x^2 + (1+i+j+k)x + (2-i-j+k); one isolated zero i in [[i]]
P1 = CoqPolynomial.from_tuples([(2, -1, -1, 1), (1, 1, 1, 1), (1, 0, 0, 0)])

# x^2 - (3+j)x + (2+j); two lines of zeros
P2 = CoqPolynomial.from_tuples([(2, 0, 1, 0), (-3, 0, -1, 0), (1, 0, 0, 0)])

# cubic whose companion has six simple real roots
CUBIC = CoqPolynomial.from_tuples(
    [(2, -2, 2, 3), (-4, -5, 1, 1), (-1, 0, -5, -1), (2, 2, -1, 0)]
)
# CUBIC (x - 1); at least six lines of zeros
P3 = poly_multiply(CUBIC, CoqPolynomial.from_real([-1.0, 1.0]))

# x^2 + (-5-j)x + (11/2 + 5/2 j); companion roots 1, 2, 3, 4
P4 = CoqPolynomial.from_tuples([(5.5, 0, 2.5, 0), (-5, 0, -1, 0), (1, 0, 0, 0)])

# three polynomials sharing the companion (x - 1)^4
P5 = CoqPolynomial.from_tuples([(1, 0, 0, 0), (-2, 0, 0, 0), (1, 0, 0, 0)])
Q5 = CoqPolynomial.from_tuples([(1, 1, 1, 0), (-2, -1, -1, 0), (1, 0, 0, 0)])
R5 = CoqPolynomial.from_tuples([(0, 3, 2, 2), (-2, -6, -5, -3), (1, 0, 0, 0)])

# degree five with the maximal 45 zero classes
P6 = CoqPolynomial.from_tuples(
    [
        (-9, -12, -18, 9),
        (-51, 40.5, -28.5, -52),
        (-23.5, -32, -18, 16.5),
        (24, 6.5, 5.5, -6),
        (0.5, 1, 7, 6.5),
        (1, 0, 0, 0),
    ]
)
P6_ZERO_IN_1_SQRT2_J = Coquaternion(1.0, 3.0 / 8.0, -11.0 / 8.0, -0.5)
P6_ZERO_IN_J = Coquaternion(0.0, 17.0 / 84.0, -27.0 / 28.0, -1.0 / 3.0)
P6_COMPANION_ROOTS = sorted(
    [-6.0, -3.0, -1.0, 1.0, 2.0, 5.0, 1 - SQRT2, 1 + SQRT2, (-1 - math.sqrt(5)) / 2, (-1 + math.sqrt(5)) / 2]
)


def p2_line_in_1(beta: float) -> Coquaternion:
    return Coquaternion(1.0, beta, 0.0, beta)


def p2_line_in_2_j(beta: float) -> Coquaternion:
    return Coquaternion(2.0, beta, 1.0, -beta)


def p3_line_in_j(beta: float) -> Coquaternion:
    return Coquaternion(0.0, beta, -0.6 * beta - 0.8, -0.8 * beta + 0.6)


def q5_line_in_1(beta: float) -> Coquaternion:
    return Coquaternion(1.0, beta, beta, 0.0)
