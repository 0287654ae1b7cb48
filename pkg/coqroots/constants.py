## Shared constants for coqroots


class CoqRootsError(Exception):
    """
    Base class for every error raised by coqroots.
    """

    pass


## default tolerances, see coqroots.config.Tolerances
EPS_SINGULAR = 1e-10
EPS_TYPE = 1e-9
EPS_CLUSTER = 1e-6
EPS_CLUSTER_ROOT = 1e-12
EPS_MULTIPLICITY = 1e-10
EPS_ZERO_B = 1e-8
EPS_LINEAR = 1e-8
EPS_CONSISTENCY = 1e-8
EPS_RESIDUAL = 1e-8
EPS_POLY = 1e-10
# the --tol flag is expressed relative to this value
REFERENCE_TOLERANCE = EPS_ZERO_B

## verification defaults
DEFAULT_SAMPLE_COUNT = 16
DEFAULT_BETAS = (-10.0, -1.0, -0.1, 0.0, 0.1, 1.0, 10.0)
DEFAULT_SEED = 0

## cli defaults
DEFAULT_MAX_DEGREE = 64
DEFAULT_WORKERS = 4
OUTPUT_FORMATS = ["text", "json"]

## exit codes
EXIT_OK = 0
EXIT_MALFORMED_INPUT = 1
EXIT_SINGULAR_LEADING = 2
EXIT_CERTIFICATION_FAILED = 3

## report keys
COEFFICIENTS = "coefficients"
OPTIONS = "options"
DEGREE = "degree"
COMPANION = "companion"
ROOTS = "roots"
CLASSES = "classes"
COUNTS = "counts"
CERTIFICATION = "certification"
