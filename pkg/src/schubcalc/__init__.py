"""Exact Schubert calculus on Grassmannians, with a finite-field brute-force oracle."""

from .errors import BudgetExceededError, ContextMismatchError, ValidationError
from .ring import CohomologyClass, basis_product, cup, cup_nonzero, duality_coefficient, lr_coefficient
from .young import (
    JumpingNumbers,
    RankTable,
    RectangleContext,
    YoungDiagram,
    complement,
    diagram_from_jumps,
    fits_in,
    jumps_from_diagram,
    jumps_from_rank_table,
    overlap_test,
    rank_table_from_jumps,
)

__version__ = "0.1.0"
