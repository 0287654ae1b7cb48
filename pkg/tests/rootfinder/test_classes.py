import math

import numpy as np
import pytest

from coqroots.algebra.coquaternion import ClassType, Coquaternion
from coqroots.polynomials.cqpoly import companion
from coqroots.polynomials.rpoly import RootCluster, real_roots
from coqroots.rootfinder.classes import ProvenanceKind, admissible_classes
from tests.fixtures import P1


def _real(*values: float) -> list:
    return [RootCluster(complex(v), 1, True) for v in values]


class TestAdmissibleClasses:
    def test_p1(self) -> None:
        classes = admissible_classes(real_roots(companion(P1)))
        assert [c.type_tag for c in classes] == [ClassType.TYPE1, ClassType.TYPE1]
        assert [c.key for c in classes] == [
            (pytest.approx(-1.0), pytest.approx(2.0)),
            (pytest.approx(0.0, abs=1e-12), pytest.approx(1.0)),
        ]
        assert (classes[1].representative - Coquaternion(0, 1, 0, 0)).norm() <= 1e-12
        assert classes[0].representative.q1 == pytest.approx(math.sqrt(2.0))
        assert classes[0].provenance.kind is ProvenanceKind.CONJUGATE_PAIR

    def test_four_simple_real_roots(self) -> None:
        classes = admissible_classes(_real(1.0, 2.0, 3.0, 4.0))
        assert len(classes) == 6
        assert all(c.type_tag is ClassType.TYPE2 for c in classes)
        assert [c.key for c in classes] == [
            (1.5, -0.25),
            (2.0, -1.0),
            (2.5, -2.25),
            (2.5, -0.25),
            (3.0, -1.0),
            (3.5, -0.25),
        ]
        two_plus_j = classes[1]
        assert two_plus_j.representative == Coquaternion(2, 0, 1, 0)
        assert two_plus_j.provenance.roots == (1 + 0j, 3 + 0j)
        assert str(two_plus_j) == "[[2 + 0i + 1j + 0k]] (Type2)"

    def test_triple_and_simple(self) -> None:
        roots = [RootCluster(1 + 0j, 3, True), RootCluster(3 + 0j, 1, True)]
        classes = admissible_classes(roots)
        assert [c.key for c in classes] == [(1.0, 0.0), (2.0, -1.0)]
        assert classes[0].type_tag is ClassType.TYPE3
        assert classes[0].provenance.kind is ProvenanceKind.REPEATED_REAL
        assert len(classes[0].provenance.roots) == 3
        assert classes[1].provenance.kind is ProvenanceKind.REAL_PAIR

    def test_simple_real_root_alone_is_not_a_class(self) -> None:
        roots = [RootCluster(2 + 0j, 1, True), RootCluster(1j, 1, False), RootCluster(-1j, 1, False)]
        classes = admissible_classes(roots)
        assert len(classes) == 1
        assert classes[0].key == (0.0, 1.0)

    def test_repeated_pair_gives_one_class(self) -> None:
        roots = [RootCluster(-1j, 2, False), RootCluster(1j, 2, False)]
        assert len(admissible_classes(roots)) == 1

    def test_numerically_equal_classes_merge(self) -> None:
        roots = [
            RootCluster(1 - 2j, 1, False),
            RootCluster(1 - (2 + 1e-9) * 1j, 1, False),
            RootCluster(1 + 2j, 1, False),
            RootCluster(1 + (2 + 1e-9) * 1j, 1, False),
        ]
        classes = admissible_classes(roots)
        assert len(classes) == 1
        assert classes[0].dv == pytest.approx(4.0)

    def test_count_bound(self) -> None:
        rng = np.random.default_rng(13)
        for degree in range(1, 6):
            values = np.sort(rng.normal(scale=5.0, size=2 * degree))
            classes = admissible_classes(_real(*values))
            assert len(classes) == degree * (2 * degree - 1)
