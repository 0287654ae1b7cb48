import json
from typing import Any, Dict, Optional

from jinja2 import Environment, PackageLoader

from ..constants import CERTIFICATION, CLASSES, COEFFICIENTS, COMPANION, COUNTS, DEGREE, ROOTS
from ..rootfinder.report import RootReport
from ..rootfinder.zeros import ZeroDescriptor
from ..verify.certify import CertificationResult

TEXT_TEMPLATE = "report.txt.j2"


def _num(value: float) -> str:
    text = f"{value:.12g}"
    return "0" if text == "-0" else text


def _cnum(value: complex) -> str:
    sign = "-" if value.imag < 0 else "+"
    return f"{_num(value.real)} {sign} {_num(abs(value.imag))}i"


def _environment() -> Environment:
    env = Environment(
        loader=PackageLoader("coqroots", package_path="cliutils/templates"),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )
    env.filters["num"] = _num
    env.filters["cnum"] = _cnum
    return env


def render_text(report: RootReport, certification: Optional[CertificationResult] = None) -> str:
    template = _environment().get_template(TEXT_TEMPLATE)
    return template.render(report=report, counts=report.counts(), certification=certification)


def descriptor_to_dict(descriptor: ZeroDescriptor) -> Dict[str, Any]:
    data: Dict[str, Any] = {}
    if descriptor.zero is not None:
        data["z"] = list(descriptor.zero.as_tuple())
    if descriptor.line is not None:
        data["gamma0"] = descriptor.line.gamma0
        data["k1"] = descriptor.line.k1
        data["k2"] = descriptor.line.k2
    return {
        "q0": descriptor.klass.q0,
        "dv": descriptor.klass.dv,
        "type": descriptor.klass.type_tag.value,
        "kind": descriptor.kind.value,
        "branch": descriptor.branch.value,
        "data": data,
        "diagnostics": {
            "A": list(descriptor.A.as_tuple()),
            "B": list(descriptor.B.as_tuple()),
            "det_b": descriptor.det_b,
            "notes": list(descriptor.notes),
        },
    }


def certification_to_dict(certification: CertificationResult) -> Dict[str, Any]:
    return {
        "passed": certification.passed,
        "worst_residual": certification.worst_residual,
        "failures": [
            {
                "index": check.index,
                "kind": check.kind.value,
                "worst_residual": check.worst_residual,
                "messages": list(check.messages),
            }
            for check in certification.failures
        ],
    }


def report_to_dict(
    report: RootReport, certification: Optional[CertificationResult] = None
) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        DEGREE: report.degree,
        COMPANION: {
            COEFFICIENTS: list(report.companion.coefficients),
            ROOTS: [
                {"re": r.value.real, "im": r.value.imag, "multiplicity": r.multiplicity}
                for r in report.roots
            ],
        },
        CLASSES: [descriptor_to_dict(d) for d in report.classes],
        COUNTS: report.counts(),
    }
    if certification is not None:
        document[CERTIFICATION] = certification_to_dict(certification)
    return document


def render_json(report: RootReport, certification: Optional[CertificationResult] = None) -> str:
    return json.dumps(report_to_dict(report, certification), indent=2, sort_keys=True)
