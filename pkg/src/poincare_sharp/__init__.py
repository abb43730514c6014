"""Sharp constants for a pointwise Poincare-type inequality on [-1, 1].

For functions whose first m moments vanish, the value |y(x)| is bounded by
a constant times the L2 norm of y'. This package computes that best
constant exactly (as a rational number squared), builds the extremal
function attaining it, and cross-checks everything against an independent
finite-element minimization.
"""

from .exactnum import Rational, as_rational, format_rational, parse_rational, rat
from .polyalg import (
    KinkFunction,
    Polynomial,
    abs_kernel_integral,
    coeff_strings,
    definite_integral,
    monomial,
    poly,
    poly_eval,
    poly_from_strings,
)
from .legendre import (
    LegendreTable,
    build_table,
    check_identities,
    double_factorial,
    rodrigues_polynomial,
    sample_points,
    shared_table,
)
from .sharp import (
    SharpFamily,
    SharpSolution,
    bsq_zero_closed,
    endpoint_constant,
    endpoint_extremal,
    energy_of_extremal,
    extremal,
    solve_family,
    solve_interior,
)
from .oracle import (
    ConvergenceRow,
    NumericalFailure,
    OracleResult,
    assemble_system,
    convergence_rates,
    fem_solve,
    grid_points,
)
from .verify import VerificationReport, VerifyCheck, run_verification

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "as_rational",
    "format_rational",
    "parse_rational",
    "rat",
    "KinkFunction",
    "Polynomial",
    "abs_kernel_integral",
    "coeff_strings",
    "definite_integral",
    "monomial",
    "poly",
    "poly_eval",
    "poly_from_strings",
    "LegendreTable",
    "build_table",
    "check_identities",
    "double_factorial",
    "rodrigues_polynomial",
    "sample_points",
    "shared_table",
    "SharpFamily",
    "SharpSolution",
    "bsq_zero_closed",
    "endpoint_constant",
    "endpoint_extremal",
    "energy_of_extremal",
    "extremal",
    "solve_family",
    "solve_interior",
    "ConvergenceRow",
    "NumericalFailure",
    "OracleResult",
    "assemble_system",
    "convergence_rates",
    "fem_solve",
    "grid_points",
    "VerificationReport",
    "VerifyCheck",
    "run_verification",
    "__version__",
]
