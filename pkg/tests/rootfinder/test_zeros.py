from typing import List

import pytest

from coqroots.algebra.coquaternion import I, J, ONE, Coquaternion
from coqroots.constants import DEFAULT_BETAS
from coqroots.polynomials.cqpoly import CoqPolynomial, companion, evaluate
from coqroots.polynomials.rpoly import real_roots
from coqroots.rootfinder.classes import AdmissibleClass, admissible_classes
from coqroots.rootfinder.zeros import Branch, ZeroKind, ZeroLine, _below, zeros_in_class
from tests.fixtures import P1, P2, P4, P5, Q5, R5, p2_line_in_1, p2_line_in_2_j, q5_line_in_1


def _class(P: CoqPolynomial, q0: float, dv: float) -> AdmissibleClass:
    for klass in admissible_classes(real_roots(companion(P))):
        if abs(klass.q0 - q0) <= 1e-6 and abs(klass.dv - dv) <= 1e-6:
            return klass
    raise AssertionError(f"no admissible class ({q0}, {dv})")


class TestZerosInClass:
    def test_nonreal_gamma(self) -> None:
        descriptor = zeros_in_class(P1, _class(P1, 0.0, 1.0))
        assert descriptor.kind is ZeroKind.ISOLATED
        assert descriptor.branch is Branch.NONREAL_GAMMA
        assert (descriptor.A - Coquaternion(1, -1, -1, 1)).norm() <= 1e-12
        assert (descriptor.B - Coquaternion(1, 1, 1, 1)).norm() <= 1e-12
        assert (descriptor.zero - I).norm() <= 1e-10
        assert descriptor.contains(I)

    def test_inconsistent(self) -> None:
        descriptor = zeros_in_class(P1, _class(P1, -1.0, 2.0))
        assert descriptor.kind is ZeroKind.EMPTY
        assert descriptor.branch is Branch.INCONSISTENT
        assert descriptor.zero is None and descriptor.line is None

    def test_real_gamma_line(self) -> None:
        descriptor = zeros_in_class(P2, _class(P2, 1.0, 0.0))
        assert descriptor.kind is ZeroKind.LINEAR
        assert descriptor.branch is Branch.REAL_GAMMA_LINE
        line = descriptor.line
        assert line.gamma0 == pytest.approx(1.0, abs=1e-8)
        assert line.k1 == pytest.approx(-1.0, abs=1e-8)
        assert line.k2 == pytest.approx(0.0, abs=1e-8)
        for beta in DEFAULT_BETAS:
            assert descriptor.contains(p2_line_in_1(beta))
        assert not descriptor.contains(Coquaternion(1, 1, 0, -1))

    def test_second_line_of_p2(self) -> None:
        descriptor = zeros_in_class(P2, _class(P2, 2.0, -1.0))
        assert descriptor.kind is ZeroKind.LINEAR
        for beta in DEFAULT_BETAS:
            assert descriptor.contains(p2_line_in_2_j(beta))

    @pytest.mark.parametrize("q0", [2.0, 3.0])
    def test_real_gamma_off_the_class(self, q0: float) -> None:
        descriptor = zeros_in_class(P4, _class(P4, q0, -1.0))
        assert descriptor.kind is ZeroKind.EMPTY
        assert descriptor.branch is Branch.REAL_GAMMA_EMPTY

    def test_zero_remainder(self) -> None:
        descriptor = zeros_in_class(P5, _class(P5, 1.0, 0.0))
        assert descriptor.kind is ZeroKind.HYPERBOLOIDAL
        assert descriptor.branch is Branch.ZERO_B_ZERO_A
        assert descriptor.contains(Coquaternion(1, 5, 4, 3))
        assert not descriptor.contains(Coquaternion(1, 5, 4, 2))

    def test_zero_b_nonzero_a(self) -> None:
        # x^2 - 2x + 1 + j has no zeros at all
        P = CoqPolynomial.from_tuples([(1, 0, 1, 0), (-2, 0, 0, 0), (1, 0, 0, 0)])
        classes = admissible_classes(real_roots(companion(P)))
        assert len(classes) == 2
        for klass in classes:
            descriptor = zeros_in_class(P, klass)
            assert descriptor.kind is ZeroKind.EMPTY
            assert descriptor.branch is Branch.ZERO_B_NONZERO_A

    def test_invertible_b(self) -> None:
        descriptor = zeros_in_class(R5, _class(R5, 1.0, 0.0))
        assert descriptor.kind is ZeroKind.ISOLATED
        assert descriptor.branch is Branch.INVERTIBLE_B
        assert descriptor.det_b == pytest.approx(2.0)
        assert (descriptor.zero - Coquaternion(1, 5, 4, 3)).norm() <= 1e-8
        assert evaluate(R5, descriptor.zero).norm() <= 1e-8

    def test_q5_line(self) -> None:
        descriptor = zeros_in_class(Q5, _class(Q5, 1.0, 0.0))
        assert descriptor.kind is ZeroKind.LINEAR
        for beta in DEFAULT_BETAS:
            assert descriptor.contains(q5_line_in_1(beta))


class TestZeroLine:
    def test_points(self) -> None:
        line = ZeroLine(q0=0.0, gamma0=1.0, k1=0.8, k2=-0.6)
        assert line.point(0.0) == Coquaternion(0.0, 0.0, -0.8, 0.6)
        assert line.point(5.0).q1 == 5.0
        assert line.contains(line.point(-3.5))
        assert not line.contains(line.point(2.0) + J)
        assert not line.contains(line.point(2.0) + ONE)


class TestThresholds:
    def test_near_threshold_is_noted(self) -> None:
        notes: List[str] = []
        assert _below("|B|", 5e-9, 1e-8, notes)
        assert not _below("|B|", 5e-8, 1e-8, notes)
        assert len(notes) == 2
        assert "within a factor 10" in notes[0]

    def test_far_from_threshold_is_silent(self) -> None:
        notes: List[str] = []
        assert _below("|B|", 1e-20, 1e-8, notes)
        assert not _below("|B|", 1.0, 1e-8, notes)
        assert notes == []
