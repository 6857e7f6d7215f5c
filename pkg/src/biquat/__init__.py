"""Complex-quaternion algebra, G-monogenic mappings on the subspace E3, and
numerical verification of curvilinear Cauchy-type integral theorems."""

from .algebra import E1, E2, E3, E4, Quaternion, from_ijk, ijk_mul, one, to_ijk, zero
from .integrals import (
    DEFAULT_SCHEDULE,
    IntegralResult,
    IntegrationEvaluationError,
    QuadratureSpec,
    RefinementResult,
    integrate_componentwise_oracle,
    integrate_left,
    integrate_right,
    refine_until,
)
from .maps import (
    EvaluationError,
    Exponential,
    GenericMap,
    MonogenicMap,
    PoleProximityError,
    Polynomial,
    Rational,
    conj_xi1_control,
    gateaux_residual,
)
from .space import (
    DEFAULT_GENERATOR,
    Curve,
    DegenerateGeneratorError,
    GeneratorTriple,
    HomotopyFamily,
    Point3,
    check_independence,
    circle,
    component_bound_constant,
    concat,
    ellipse,
    embed,
    embed_xi,
    linear_homotopy,
    mes,
    polygon,
    segment,
    subdivide_by_arclength,
    wobbly_loop,
)

__version__ = "0.1.0"

__all__ = [
    "Quaternion",
    "E1",
    "E2",
    "E3",
    "E4",
    "one",
    "zero",
    "to_ijk",
    "from_ijk",
    "ijk_mul",
    "GeneratorTriple",
    "DEFAULT_GENERATOR",
    "DegenerateGeneratorError",
    "Point3",
    "Curve",
    "HomotopyFamily",
    "embed",
    "embed_xi",
    "check_independence",
    "component_bound_constant",
    "mes",
    "subdivide_by_arclength",
    "circle",
    "ellipse",
    "segment",
    "polygon",
    "wobbly_loop",
    "concat",
    "linear_homotopy",
    "Polynomial",
    "Exponential",
    "Rational",
    "MonogenicMap",
    "GenericMap",
    "EvaluationError",
    "PoleProximityError",
    "gateaux_residual",
    "conj_xi1_control",
    "QuadratureSpec",
    "IntegralResult",
    "RefinementResult",
    "IntegrationEvaluationError",
    "DEFAULT_SCHEDULE",
    "integrate_right",
    "integrate_left",
    "integrate_componentwise_oracle",
    "refine_until",
]
