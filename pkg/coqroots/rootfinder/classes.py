"""
Admissible quasi-similarity classes.

Each real monic quadratic dividing the companion polynomial is the
characteristic polynomial of exactly one class; those classes are the only
places a zero can live.  They come from three sources among the companion
roots: a conjugate pair, two distinct real roots, or a repeated real root.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from ..algebra.coquaternion import ClassType, Coquaternion
from ..config import DEFAULT_TOLERANCES, Tolerances
from ..polynomials.rpoly import RootCluster


class ProvenanceKind(Enum):
    CONJUGATE_PAIR = "conjugate pair"
    REAL_PAIR = "real pair"
    REPEATED_REAL = "repeated real root"


@dataclass(frozen=True)
class Provenance:
    kind: ProvenanceKind
    roots: Tuple[complex, ...]


@dataclass(frozen=True)
class AdmissibleClass:
    q0: float
    dv: float
    type_tag: ClassType
    representative: Coquaternion
    provenance: Provenance

    @property
    def key(self) -> Tuple[float, float]:
        return (self.q0, self.dv)

    def __str__(self) -> str:
        return f"[[{self.representative}]] ({self.type_tag.value})"


def _from_conjugate_pair(root: RootCluster) -> AdmissibleClass:
    w = root.value
    return AdmissibleClass(
        q0=w.real,
        dv=w.imag**2,
        type_tag=ClassType.TYPE1,
        representative=Coquaternion(w.real, abs(w.imag), 0.0, 0.0),
        provenance=Provenance(ProvenanceKind.CONJUGATE_PAIR, (w, w.conjugate())),
    )


def _from_real_pair(first: RootCluster, second: RootCluster) -> AdmissibleClass:
    rj, rk = first.value.real, second.value.real
    half_gap = abs(rj - rk) / 2.0
    return AdmissibleClass(
        q0=(rj + rk) / 2.0,
        dv=-(half_gap**2),
        type_tag=ClassType.TYPE2,
        representative=Coquaternion((rj + rk) / 2.0, 0.0, half_gap, 0.0),
        provenance=Provenance(ProvenanceKind.REAL_PAIR, (complex(rj), complex(rk))),
    )


def _from_repeated_real(root: RootCluster) -> AdmissibleClass:
    r = root.value.real
    return AdmissibleClass(
        q0=r,
        dv=0.0,
        type_tag=ClassType.TYPE3,
        representative=Coquaternion(r),
        provenance=Provenance(ProvenanceKind.REPEATED_REAL, (complex(r),) * root.multiplicity),
    )


def admissible_classes(
    roots: Sequence[RootCluster], tol: Tolerances = DEFAULT_TOLERANCES
) -> List[AdmissibleClass]:
    candidates: List[AdmissibleClass] = []
    real = [r for r in roots if r.is_real]
    for root in roots:
        if not root.is_real and root.value.imag > 0:
            candidates.append(_from_conjugate_pair(root))
    for first, second in combinations(real, 2):
        candidates.append(_from_real_pair(first, second))
    for root in real:
        if root.multiplicity >= 2:
            candidates.append(_from_repeated_real(root))

    unique: Dict[Tuple[int, int], AdmissibleClass] = {}
    for candidate in candidates:
        key = (round(candidate.q0 / tol.cluster), round(candidate.dv / tol.cluster))
        if key in unique:
            logging.debug(f"merging duplicate class {candidate} into {unique[key]}")
            continue
        unique[key] = candidate

    classes = sorted(unique.values(), key=lambda c: (c.q0, c.dv))
    logging.debug(
        f"{len(classes)} admissible classes: " + ", ".join(str(c) for c in classes)
    )
    return classes
