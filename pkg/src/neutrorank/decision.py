"""Rank alternatives from a neutrosophic decision matrix.

Each alternative's row is aggregated with a weighted operator, the
aggregate is scored, and alternatives are sorted best first.  Accuracy is
consulted only between alternatives whose scores tie; if accuracy ties too,
the alternatives share a rank and keep their input order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Optional, Sequence

from . import ranking
from .aggregation import Operator, WeightVector, aggregate
from .core import (
    EPS_EQ,
    DimensionError,
    InValue,
    Policy,
    SvnValue,
    ValidationError,
    complement_in,
    complement_svn,
)
from .ranking import DecidedBy, Relation


@dataclass(frozen=True)
class DecisionMatrix:
    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    weights: WeightVector
    entries: tuple[tuple, ...]
    policy: Policy = Policy.STRICT

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        object.__setattr__(self, "policy", Policy(self.policy))
        if not isinstance(self.weights, WeightVector):
            object.__setattr__(self, "weights", WeightVector(tuple(self.weights)))

        if not self.alternatives:
            raise ValidationError("no alternatives")
        if not self.criteria:
            raise ValidationError("no criteria")
        _check_unique(self.alternatives, "alternative")
        _check_unique(self.criteria, "criterion")
        if len(self.weights) != len(self.criteria):
            raise DimensionError(f"{len(self.weights)} weights for {len(self.criteria)} criteria")
        if len(self.entries) != len(self.alternatives):
            raise DimensionError(
                f"{len(self.entries)} rows for {len(self.alternatives)} alternatives"
            )

        for name, row in zip(self.alternatives, self.entries):
            if len(row) != len(self.criteria):
                raise DimensionError(
                    f"alternative {name!r}: {len(row)} values for {len(self.criteria)} criteria"
                )
        kind = type(self.entries[0][0])
        if kind not in (SvnValue, InValue):
            raise ValidationError("entries must be SvnValue or InValue")
        for name, row in zip(self.alternatives, self.entries):
            for crit, v in zip(self.criteria, row):
                if type(v) is not kind:
                    raise ValidationError(
                        f"alternative {name!r}, criterion {crit!r}: mixed entry kinds "
                        f"({type(v).__name__} in a {kind.__name__} matrix)"
                    )
                if kind is InValue and self.policy is Policy.STRICT and v.lenient:
                    raise ValidationError(
                        f"alternative {name!r}, criterion {crit!r}: descending interval "
                        "under strict validation"
                    )

    @property
    def kind(self) -> type:
        return type(self.entries[0][0])

    def row(self, name: str) -> tuple:
        return self.entries[self.alternatives.index(name)]


def _check_unique(names, what):
    seen = set()
    for n in names:
        if n in seen:
            raise ValidationError(f"duplicate {what} name {n!r}")
        seen.add(n)


def apply_cost_criteria(matrix: DecisionMatrix, names: Sequence[str]) -> DecisionMatrix:
    """Replace the values of cost criteria by their complements.

    Not part of the base method, which treats every criterion as a benefit;
    this is opt-in preprocessing only.
    """
    unknown = [n for n in names if n not in matrix.criteria]
    if unknown:
        raise ValidationError(f"unknown cost criteria: {', '.join(map(repr, unknown))}")
    comp = complement_in if matrix.kind is InValue else complement_svn
    cols = {matrix.criteria.index(n) for n in names}
    entries = [
        [comp(v) if s in cols else v for s, v in enumerate(row)] for row in matrix.entries
    ]
    return DecisionMatrix(
        matrix.alternatives, matrix.criteria, matrix.weights, entries, matrix.policy
    )


@dataclass(frozen=True)
class RankedRow:
    name: str
    aggregate: object
    score: float
    accuracy: Optional[float]
    rank: int


@dataclass(frozen=True)
class TieEvent:
    pair: tuple[str, str]
    decided_by: DecidedBy


@dataclass(frozen=True)
class RankingReport:
    rows: tuple[RankedRow, ...]
    operator: Operator
    kind: str
    tie_events: tuple[TieEvent, ...] = field(default=())

    def order(self) -> list[str]:
        return [r.name for r in self.rows]

    def by_name(self, name: str) -> RankedRow:
        for r in self.rows:
            if r.name == name:
                return r
        raise KeyError(name)


def _rank(matrix: DecisionMatrix, operator, executor=None) -> RankingReport:
    operator = Operator(operator)
    w = matrix.weights
    rows = matrix.entries
    if executor is not None:
        aggs = list(executor.map(lambda row: aggregate(row, w, operator), rows))
    else:
        aggs = [aggregate(row, w, operator) for row in rows]
    scores = [ranking.score(a) for a in aggs]

    n = len(aggs)
    tied = [
        (i, j)
        for i, j in itertools.combinations(range(n), 2)
        if abs(scores[i] - scores[j]) <= EPS_EQ
    ]
    involved = {k for pair in tied for k in pair}
    accs = {k: ranking.accuracy(aggs[k]) for k in sorted(involved)}

    def cmp(i, j):
        return ranking.compare_keys(scores[i], accs.get(i), scores[j], accs.get(j))

    # list.sort is stable, so double ties keep input order
    order = sorted(range(n), key=cmp_to_key(lambda i, j: -cmp(i, j).sign))

    ranks = {}
    for pos, k in enumerate(order):
        if pos and cmp(order[pos - 1], k).relation is Relation.EQUAL:
            ranks[k] = ranks[order[pos - 1]]
        else:
            ranks[k] = pos + 1

    position = {k: pos for pos, k in enumerate(order)}
    events = []
    for i, j in sorted(tied, key=lambda p: sorted(position[k] for k in p)):
        first, second = sorted((i, j), key=position.get)
        events.append(
            TieEvent(
                (matrix.alternatives[first], matrix.alternatives[second]),
                cmp(first, second).decided_by,
            )
        )

    report_rows = tuple(
        RankedRow(matrix.alternatives[k], aggs[k], scores[k], accs.get(k), ranks[k])
        for k in order
    )
    kind = "interval" if matrix.kind is InValue else "svn"
    return RankingReport(report_rows, operator, kind, tuple(events))


def rank_svn(matrix: DecisionMatrix, operator=Operator.ARITHMETIC, executor=None) -> RankingReport:
    """Rank a matrix of single-valued neutrosophic entries.

    Parameters
    ----------
    matrix : DecisionMatrix
        Matrix whose entries are all ``SvnValue``.
    operator : Operator or str
        ``"arithmetic"`` or ``"geometric"`` row aggregation.
    executor : concurrent.futures.Executor, optional
        If given, rows are aggregated through ``executor.map``.  The report
        is identical to sequential evaluation.
    """
    if matrix.kind is not SvnValue:
        raise ValidationError("rank_svn needs a matrix of single-valued entries")
    return _rank(matrix, operator, executor)


def rank_in(matrix: DecisionMatrix, operator=Operator.ARITHMETIC, executor=None) -> RankingReport:
    """Rank a matrix of interval neutrosophic entries.

    A matrix built with ``Policy.LENIENT`` may hold descending bound pairs;
    these are aggregated and scored exactly as stored.
    """
    if matrix.kind is not InValue:
        raise ValidationError("rank_in needs a matrix of interval entries")
    return _rank(matrix, operator, executor)


def rank(matrix: DecisionMatrix, operator=Operator.ARITHMETIC, executor=None) -> RankingReport:
    if matrix.kind is InValue:
        return rank_in(matrix, operator, executor)
    return rank_svn(matrix, operator, executor)
