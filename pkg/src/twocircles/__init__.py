"""Pythagorean triangles hidden in two externally tangent circles.

Exact surd arithmetic, integrality classification, fully integral
configuration generation, bounded quartic searches and a floating-point
coordinate oracle that re-measures the figure.
"""

from .errors import (
    IncompatibleRadicands,
    InvalidInput,
    InvalidParams,
    InvalidRadii,
    InvalidTriple,
    TwoCirclesError,
    VerificationFailure,
)
from .exact_arith import Surd, is_perfect_square, squarefree_decompose
from .triples import (
    PythTriple,
    TripleParams,
    enumerate_primitive_triples,
    square_product_decompose,
    triple_from_params,
    verify_coprimeness,
)
from .lengths import (
    LengthSet,
    RadiiPair,
    TriangleRecord,
    assemble_triangles,
    compute_lengths,
    verify_pythagorean,
)
from .integrality import IntegralityReport, Tier, classify, necessity_check, rational_lengths
from .generator import FullConfig, enumerate_configs, generate, generate_from_triple
from .diophantine import (
    IrrationalityCertificate,
    QuarticHit,
    certify_irrational,
    search_minus_mixed,
    search_plus14,
)
from .oracle import Scene, build_scene, check_angles, cross_check, measure

__version__ = "0.1.0"
