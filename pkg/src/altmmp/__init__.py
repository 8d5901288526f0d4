"""Exact distributions of quadrant marked mesh pattern statistics on
alternating permutations, by enumeration, convolution recursion, and
formal power series, with a verdict suite that cross-checks the three.
"""

from .patterns import (
    BudgetExceededError,
    MarkedDistribution,
    QuadrantPattern,
    all_patterns,
    distribution,
    marked_distribution,
    matches,
    mmp,
    quadrant_counts,
)
from .permutations import (
    DOWN_UP,
    UP_DOWN,
    AlternatingClass,
    complement,
    descent_set,
    generate_alternating,
    is_alternating,
    reduce,
    reverse,
    reverse_complement,
)
from .polynomials import ONE, X, ZERO, Poly
from .recurrences import Family, barred_poly, family_poly, zigzag
from .series import (
    Series,
    egf_coeff,
    family_series,
    hyp2f1,
    integrate,
    pow_poly,
    sec_series,
    solve_linear_ode,
    tan_series,
)
from .theorems import Verdict, run_checks

__version__ = "0.1.0"

__all__ = [
    "AlternatingClass",
    "BudgetExceededError",
    "DOWN_UP",
    "Family",
    "MarkedDistribution",
    "ONE",
    "Poly",
    "QuadrantPattern",
    "Series",
    "UP_DOWN",
    "Verdict",
    "X",
    "ZERO",
    "all_patterns",
    "barred_poly",
    "complement",
    "descent_set",
    "distribution",
    "egf_coeff",
    "family_poly",
    "family_series",
    "generate_alternating",
    "hyp2f1",
    "integrate",
    "is_alternating",
    "marked_distribution",
    "matches",
    "mmp",
    "pow_poly",
    "quadrant_counts",
    "reduce",
    "reverse",
    "reverse_complement",
    "run_checks",
    "sec_series",
    "solve_linear_ode",
    "tan_series",
    "zigzag",
    "__version__",
]
