"""Finite set-theoretic Yang-Baxter solutions, their reflections and derived solutions."""
from .core import (
    FiniteSolution,
    PointMap,
    PredicateReport,
    apply_r,
    check_degeneracy,
    check_involutive_invertible,
    check_re,
    check_ybe,
    predicate_report,
    solutions_isomorphic,
)
from .derive import BinaryOp, derived_solution
from .errors import ParseError, PreconditionError, RangeError, ResourceError, SizeError, YBError

__version__ = "0.1.0"
