import pytest

from coqroots.algebra.coquaternion import ClassType, vector_determinant
from coqroots.polynomials.cqpoly import class_of_char_poly
from coqroots.rootfinder.report import find_all_zeros
from coqroots.verify.sampling import sample_class, sample_line
from tests.fixtures import P1, P2


class TestSampleClass:
    @pytest.mark.parametrize("re2, det", [(2.0, 5.0), (4.0, 3.0), (2.0, 1.0), (-1.0, 7.25)])
    def test_points_lie_in_the_class(self, re2: float, det: float) -> None:
        klass = class_of_char_poly(re2, det)
        sample = sample_class(klass, 16, seed=9)
        assert len(sample) == 16
        for point in sample.points:
            assert point.q0 == klass.q0
            assert vector_determinant(point) == pytest.approx(klass.dv, abs=1e-9 * (1 + point.norm() ** 2))

    def test_seeded(self) -> None:
        klass = class_of_char_poly(4.0, 3.0)
        assert sample_class(klass, 8, seed=1) == sample_class(klass, 8, seed=1)
        assert sample_class(klass, 8, seed=1) != sample_class(klass, 8, seed=2)

    def test_both_sheets_of_a_type1_class(self) -> None:
        klass = class_of_char_poly(0.0, 1.0)
        assert klass.type_tag is ClassType.TYPE1
        signs = {point.q1 > 0 for point in sample_class(klass, 4).points}
        assert signs == {True, False}

    def test_cone_starts_at_its_vertex(self) -> None:
        klass = class_of_char_poly(2.0, 1.0)
        assert sample_class(klass, 3).points[0].as_tuple() == (1.0, 0.0, 0.0, 0.0)

    def test_empty_sample(self) -> None:
        with pytest.raises(ValueError):
            sample_class(class_of_char_poly(0.0, 1.0), 0)


class TestSampleLine:
    def test_line_points(self) -> None:
        descriptor = find_all_zeros(P2).linear[0]
        points = sample_line(descriptor, (-1.0, 0.0, 2.0))
        assert [p.q1 for p in points] == [-1.0, 0.0, 2.0]
        assert all(descriptor.contains(p) for p in points)

    def test_only_lines(self) -> None:
        descriptor = find_all_zeros(P1).isolated[0]
        with pytest.raises(ValueError):
            sample_line(descriptor)
