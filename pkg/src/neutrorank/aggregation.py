"""Weighted arithmetic and geometric aggregation of neutrosophic values.

Both operators collapse a row of criterion values into one value of the
same kind.  Writing ``P(x) = prod_k x_k ** w_k``:

* arithmetic: ``(1 - P(1 - t), P(i), P(f))``
* geometric:  ``(P(t), 1 - P(1 - i), 1 - P(1 - f))``

Interval values are aggregated bound by bound with the same formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .core import DimensionError, InValue, Policy, SvnValue, UnitInterval, ValidationError

EPS_W = 1e-6


class Operator(str, Enum):
    ARITHMETIC = "arithmetic"
    GEOMETRIC = "geometric"


@dataclass(frozen=True)
class WeightVector:
    """Criterion weights, each in ``[0, 1]`` and summing to 1 within ``EPS_W``.

    Weights are used exactly as given; they are never renormalised.
    """

    weights: tuple[float, ...]

    def __post_init__(self):
        ws = []
        for k, w in enumerate(self.weights):
            if isinstance(w, bool) or not isinstance(w, (int, float)):
                raise ValidationError(f"weight[{k}]: expected a number, got {w!r}")
            w = float(w)
            if math.isnan(w) or not 0.0 <= w <= 1.0:
                raise ValidationError(f"weight[{k}]: {w!r} outside [0, 1]")
            ws.append(w)
        if not ws:
            raise ValidationError("weight vector is empty")
        total = math.fsum(ws)
        if abs(total - 1.0) > EPS_W:
            raise ValidationError(f"weights sum to {total!r}, expected 1 (tolerance {EPS_W})")
        object.__setattr__(self, "weights", tuple(ws))

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)


def _weights(w) -> WeightVector:
    return w if isinstance(w, WeightVector) else WeightVector(tuple(w))


def _wprod(xs: Sequence[float], ws: Sequence[float]) -> float:
    """``prod x_k ** w_k`` evaluated as ``exp(sum w_k ln x_k)``.

    A zero weight makes its factor 1 (``0 ** 0 = 1``); a zero base with a
    positive weight annihilates the product.
    """
    logs = []
    for x, w in zip(xs, ws):
        if w == 0.0:
            continue
        if x == 0.0:
            return 0.0
        logs.append(w * math.log(x))
    return math.exp(math.fsum(logs))


def _check_row(values, w: WeightVector, kind) -> None:
    if not values:
        raise DimensionError("cannot aggregate an empty row")
    if len(values) != len(w):
        raise DimensionError(f"{len(values)} values but {len(w)} weights")
    for k, v in enumerate(values):
        if not isinstance(v, kind):
            raise ValidationError(f"value[{k}]: expected {kind.__name__}, got {type(v).__name__}")


def _arith(ts, is_, fs, ws):
    return (
        1.0 - _wprod([1.0 - t for t in ts], ws),
        _wprod(is_, ws),
        _wprod(fs, ws),
    )


def _geom(ts, is_, fs, ws):
    return (
        _wprod(ts, ws),
        1.0 - _wprod([1.0 - i for i in is_], ws),
        1.0 - _wprod([1.0 - f for f in fs], ws),
    )


def svn_weighted_average(values: Sequence[SvnValue], w) -> SvnValue:
    w = _weights(w)
    _check_row(values, w, SvnValue)
    return SvnValue(*_arith([v.t for v in values], [v.i for v in values], [v.f for v in values], w.weights))


def svn_weighted_geometric(values: Sequence[SvnValue], w) -> SvnValue:
    w = _weights(w)
    _check_row(values, w, SvnValue)
    return SvnValue(*_geom([v.t for v in values], [v.i for v in values], [v.f for v in values], w.weights))


def _interval_aggregate(values: Sequence[InValue], w, formula) -> InValue:
    w = _weights(w)
    _check_row(values, w, InValue)
    lo = formula([v.t.lo for v in values], [v.i.lo for v in values], [v.f.lo for v in values], w.weights)
    hi = formula([v.t.hi for v in values], [v.i.hi for v in values], [v.f.hi for v in values], w.weights)
    # Both formulas are monotone per bound, so ascending inputs give ascending
    # outputs; descending (lenient) inputs are carried through as stored.
    policy = Policy.LENIENT if any(v.lenient for v in values) else Policy.STRICT
    return InValue(*(UnitInterval(l, h, policy) for l, h in zip(lo, hi)))


def in_weighted_average(values: Sequence[InValue], w) -> InValue:
    return _interval_aggregate(values, w, _arith)


def in_weighted_geometric(values: Sequence[InValue], w) -> InValue:
    return _interval_aggregate(values, w, _geom)


_OPERATORS = {
    (SvnValue, Operator.ARITHMETIC): svn_weighted_average,
    (SvnValue, Operator.GEOMETRIC): svn_weighted_geometric,
    (InValue, Operator.ARITHMETIC): in_weighted_average,
    (InValue, Operator.GEOMETRIC): in_weighted_geometric,
}


def aggregate(values, w, operator=Operator.ARITHMETIC):
    """Dispatch to the operator matching the kind of ``values``."""
    if not values:
        raise DimensionError("cannot aggregate an empty row")
    return _OPERATORS[type(values[0]), Operator(operator)](values, w)
