"""Connected domination number of grid graphs.

Closed-form values, explicit optimal witnesses, an exact solver for small
grids, and a replay of the MCDS regularization routine with audits.
"""

from .bounds import GammaBreakdown, fujie_bounds, gamma_formula, known_small_gamma, sn_lower_bound
from .construct import build_cds
from .errors import (
    CapacityError,
    ConnectivityError,
    DomainError,
    FrameError,
    GridCDSError,
    InconclusiveError,
    InvariantViolation,
    LemmaViolation,
    PreconditionError,
    RangeError,
    RoutineStuck,
)
from .grid import GridDims, VertexSet, is_cds, is_connected, is_dominating
from .solver import SolveResult, enumerate_mcds, normalize_origin, solve_gamma

__version__ = "0.1.0"
