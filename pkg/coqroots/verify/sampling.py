"""Deterministic samples of quasi-similarity classes and of lines of zeros."""

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from ..algebra.coquaternion import ClassType, Coquaternion
from ..constants import DEFAULT_BETAS, DEFAULT_SAMPLE_COUNT, DEFAULT_SEED
from ..rootfinder.classes import AdmissibleClass
from ..rootfinder.zeros import ZeroDescriptor, ZeroKind


@dataclass(frozen=True)
class ClassSample:
    points: Tuple[Coquaternion, ...]
    seed: int

    def __len__(self) -> int:
        return len(self.points)


def sample_class(
    klass: AdmissibleClass, count: int = DEFAULT_SAMPLE_COUNT, seed: int = DEFAULT_SEED
) -> ClassSample:
    """
    Points p with re(p) = q0 and p1^2 - p2^2 - p3^2 = dv.

    (p2, p3) are drawn from a seeded normal stream and p1 solved for, with the
    sign alternating between consecutive points so both sheets of a Type1
    class are visited.  Type2 draws whose radicand is negative are redrawn.
    A Type3 sample always starts with the vertex q0 itself.
    """
    if count < 1:
        raise ValueError(f"sample size must be positive, got {count}")
    rng = np.random.default_rng(seed)
    spread = 1.0 + math.sqrt(abs(klass.dv))
    points: List[Coquaternion] = []
    if klass.type_tag is ClassType.TYPE3:
        points.append(Coquaternion(klass.q0))
    sign = 1.0
    while len(points) < count:
        p2, p3 = rng.normal(scale=spread, size=2)
        radicand = klass.dv + p2**2 + p3**2
        if radicand < 0:
            continue
        points.append(Coquaternion(klass.q0, sign * math.sqrt(radicand), p2, p3))
        sign = -sign
    return ClassSample(tuple(points), seed)


def sample_line(
    descriptor: ZeroDescriptor, betas: Sequence[float] = DEFAULT_BETAS
) -> List[Coquaternion]:
    if descriptor.kind is not ZeroKind.LINEAR or descriptor.line is None:
        raise ValueError(f"descriptor of kind {descriptor.kind.value} has no line to sample")
    return [descriptor.line.point(beta) for beta in betas]
