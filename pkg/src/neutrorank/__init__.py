"""Multi-criteria ranking with single-valued and interval neutrosophic values."""

from .aggregation import (
    Operator,
    WeightVector,
    aggregate,
    in_weighted_average,
    in_weighted_geometric,
    svn_weighted_average,
    svn_weighted_geometric,
)
from .core import (
    EPS_EQ,
    DimensionError,
    InValue,
    NeutroError,
    Policy,
    SvnValue,
    UnitInterval,
    ValidationError,
    absolute_in,
    absolute_svn,
    complement_in,
    complement_svn,
    contains_in,
    contains_svn,
    equals_in,
    equals_svn,
    null_in,
    null_svn,
)
from .decision import DecisionMatrix, RankingReport, apply_cost_criteria, rank, rank_in, rank_svn
from .problem import ParseError, ProblemDocument, parse_problem, render_problem
from .ranking import (
    DecidedBy,
    Ordering,
    Relation,
    accuracy_in,
    accuracy_svn,
    compare,
    compare_in,
    compare_svn,
    score_in,
    score_svn,
)

__version__ = "0.1.0"
