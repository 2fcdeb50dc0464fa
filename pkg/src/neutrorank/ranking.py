"""Score and accuracy functions and the two-level comparators.

For ``A = (a, b, c)``::

    K(A) = (1 + a - 2b - c) / 2            score
    M(A) = a - b(1 - a) - c(1 - b)         accuracy

For ``A = ([a, b], [c, d], [e, f])``::

    L(A) = (2 + a + b - 2c - 2d - e - f) / 4
    N(A) = (a + b - d(1 - b) - c(1 - a) - f(1 - c) - e(1 - d)) / 2

All four map valid values into ``[-1, 1]``.  Values are ordered by score
first; accuracy only breaks score ties.

The functions evaluate in decimal arithmetic on the shortest repr of each
input, so hand-entered data such as ``(0.6, 0.4, 0.2)`` score exactly
``0.3`` and genuine ties are detected as ties.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Context, Decimal, localcontext
from enum import Enum

from .core import EPS_EQ, InValue, SvnValue

_CTX = Context(prec=60)


def _d(x: float) -> Decimal:
    return Decimal(repr(float(x)))


def score_svn(v: SvnValue) -> float:
    with localcontext(_CTX):
        a, b, c = _d(v.t), _d(v.i), _d(v.f)
        return float((1 + a - 2 * b - c) / 2)


def score_in(v: InValue) -> float:
    # symmetric in each bound pair, so lenient (descending) values are fine
    with localcontext(_CTX):
        a, b, c, d, e, f = map(_d, v.bounds())
        return float((2 + a + b - 2 * c - 2 * d - e - f) / 4)


def accuracy_svn(v: SvnValue) -> float:
    with localcontext(_CTX):
        a, b, c = _d(v.t), _d(v.i), _d(v.f)
        return float(a - b * (1 - a) - c * (1 - b))


def accuracy_in(v: InValue) -> float:
    """Interval accuracy, consuming the bounds in storage order.

    Unlike the score this is not symmetric in a bound pair, so a lenient
    value gives a different result from its reordered strict twin.
    """
    with localcontext(_CTX):
        a, b, c, d, e, f = map(_d, v.bounds())
        return float((a + b - d * (1 - b) - c * (1 - a) - f * (1 - c) - e * (1 - d)) / 2)


class Relation(str, Enum):
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"


class DecidedBy(str, Enum):
    SCORE = "score"
    ACCURACY = "accuracy"
    TIE_POLICY = "tie_policy"


@dataclass(frozen=True)
class Ordering:
    relation: Relation
    decided_by: DecidedBy

    @property
    def sign(self) -> int:
        return {Relation.GREATER: 1, Relation.LESS: -1, Relation.EQUAL: 0}[self.relation]


def _cmp(x: float, y: float, eps: float) -> int:
    if abs(x - y) <= eps:
        return 0
    return 1 if x > y else -1


def compare_keys(score_a, accuracy_a, score_b, accuracy_b, eps: float = EPS_EQ) -> Ordering:
    """Order two values from precomputed scores and accuracies.

    ``accuracy_a``/``accuracy_b`` may be callables; they are only evaluated
    when the scores tie.
    """
    s = _cmp(score_a, score_b, eps)
    if s:
        return Ordering(Relation.GREATER if s > 0 else Relation.LESS, DecidedBy.SCORE)
    if callable(accuracy_a):
        accuracy_a = accuracy_a()
    if callable(accuracy_b):
        accuracy_b = accuracy_b()
    s = _cmp(accuracy_a, accuracy_b, eps)
    if s:
        return Ordering(Relation.GREATER if s > 0 else Relation.LESS, DecidedBy.ACCURACY)
    return Ordering(Relation.EQUAL, DecidedBy.TIE_POLICY)


def compare_svn(a: SvnValue, b: SvnValue) -> Ordering:
    return compare_keys(
        score_svn(a), lambda: accuracy_svn(a), score_svn(b), lambda: accuracy_svn(b)
    )


def compare_in(a: InValue, b: InValue) -> Ordering:
    return compare_keys(score_in(a), lambda: accuracy_in(a), score_in(b), lambda: accuracy_in(b))


def score(v) -> float:
    return score_in(v) if isinstance(v, InValue) else score_svn(v)


def accuracy(v) -> float:
    return accuracy_in(v) if isinstance(v, InValue) else accuracy_svn(v)


def compare(a, b) -> Ordering:
    if isinstance(a, InValue) and isinstance(b, InValue):
        return compare_in(a, b)
    if isinstance(a, SvnValue) and isinstance(b, SvnValue):
        return compare_svn(a, b)
    raise TypeError(f"cannot compare {type(a).__name__} with {type(b).__name__}")
