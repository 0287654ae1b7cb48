import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Dict, List, Tuple

import tqdm

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..constants import DEFAULT_WORKERS
from ..polynomials.cqpoly import (
    CoqPolynomial,
    companion,
    monicize,
    poly_multiply,
)
from ..polynomials.rpoly import RealPolynomial, RootCluster, real_roots
from .classes import admissible_classes
from .zeros import ZeroDescriptor, ZeroKind, zeros_in_class


@dataclass(frozen=True)
class RootReport:
    """Classified zero set of a monic polynomial, one descriptor per admissible class."""

    polynomial: CoqPolynomial
    companion: RealPolynomial
    roots: Tuple[RootCluster, ...]
    classes: Tuple[ZeroDescriptor, ...]

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    @property
    def bound(self) -> int:
        """Maximal number of zero classes, n(2n - 1)."""
        return self.degree * (2 * self.degree - 1)

    def of_kind(self, kind: ZeroKind) -> List[ZeroDescriptor]:
        return [d for d in self.classes if d.kind is kind]

    @property
    def isolated(self) -> List[ZeroDescriptor]:
        return self.of_kind(ZeroKind.ISOLATED)

    @property
    def linear(self) -> List[ZeroDescriptor]:
        return self.of_kind(ZeroKind.LINEAR)

    @property
    def hyperboloidal(self) -> List[ZeroDescriptor]:
        return self.of_kind(ZeroKind.HYPERBOLOIDAL)

    def counts(self) -> Dict[str, int]:
        return {
            "isolated": len(self.isolated),
            "linear": len(self.linear),
            "hyperboloidal": len(self.hyperboloidal),
        }


def find_all_zeros(
    P: CoqPolynomial,
    tol: Tolerances = DEFAULT_TOLERANCES,
    workers: int = DEFAULT_WORKERS,
    progress: bool = False,
) -> RootReport:
    monic = monicize(P, tol)
    companion_poly = companion(monic, tol)
    roots = real_roots(companion_poly, tol)
    classes = admissible_classes(roots, tol)
    logging.info(
        f"degree {monic.degree}: {len(roots)} companion root clusters, {len(classes)} admissible classes"
    )

    descriptors = []
    with tqdm.tqdm(desc="Solving admissible classes", total=len(classes), disable=not progress) as pbar:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(zeros_in_class, monic, klass, tol) for klass in classes]
            for future in as_completed(futures):
                descriptors.append(future.result())
                pbar.update(1)
    descriptors.sort(key=lambda d: (d.klass.q0, d.klass.dv))

    report = RootReport(monic, companion_poly, tuple(roots), tuple(descriptors))
    if len(descriptors) > report.bound:
        logging.warning(f"{len(descriptors)} classes exceed the bound {report.bound}")
    logging.info(f"zero classes: {report.counts()}")
    return report


def adjoin_real_factor(
    P: CoqPolynomial, r: float, tol: Tolerances = DEFAULT_TOLERANCES
) -> CoqPolynomial:
    """P(x)(x - r); every simple real companion root of P then yields a linear zero."""
    for root in real_roots(companion(monicize(P, tol), tol), tol):
        if root.is_real and abs(root.value.real - r) <= tol.cluster * (1.0 + abs(r)):
            logging.warning(f"{r} coincides with a real companion root of the polynomial")
    return poly_multiply(P, CoqPolynomial.from_real((-r, 1.0)))
