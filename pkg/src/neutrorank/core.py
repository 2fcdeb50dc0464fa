"""Single-valued and interval neutrosophic values.

A single-valued neutrosophic (SVN) value is a triple ``(t, i, f)`` of
independent truth, indeterminacy and falsity degrees in ``[0, 1]``.  An
interval neutrosophic (IN) value replaces each degree by a closed
subinterval of ``[0, 1]``.

Naming note: the literature is inconsistent about which extreme value is
called "empty" and which "absolute".  Here ``absolute`` is ``(1, 0, 0)``
(the score maximiser) and ``null`` is ``(0, 1, 1)`` (the score minimiser).
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass
from enum import Enum

EPS_EQ = 1e-9


class NeutroError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(NeutroError, ValueError):
    """A value, weight vector or matrix violates its invariants."""


class DimensionError(NeutroError, ValueError):
    """Sequences that must align have different lengths."""


class Policy(str, Enum):
    """Interval validation policy.

    ``STRICT`` requires ``lo <= hi``.  ``LENIENT`` stores the pair exactly
    as written, which is needed to reproduce published examples that list
    interval bounds in descending order.
    """

    STRICT = "strict"
    LENIENT = "lenient"


def _check_degree(x, name: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ValidationError(f"{name}: expected a number, got {x!r}")
    x = float(x)
    if math.isnan(x) or not 0.0 <= x <= 1.0:
        raise ValidationError(f"{name}: degree {x!r} outside [0, 1]")
    return x


@dataclass(frozen=True)
class SvnValue:
    t: float
    i: float
    f: float

    def __post_init__(self):
        for name in ("t", "i", "f"):
            object.__setattr__(self, name, _check_degree(getattr(self, name), name))
        # t + i + f <= 3 follows from the per-degree range check

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.t, self.i, self.f)


@dataclass(frozen=True)
class UnitInterval:
    lo: float
    hi: float
    policy: InitVar[Policy] = Policy.STRICT

    def __post_init__(self, policy):
        object.__setattr__(self, "lo", _check_degree(self.lo, "lo"))
        object.__setattr__(self, "hi", _check_degree(self.hi, "hi"))
        if Policy(policy) is Policy.STRICT and self.lo > self.hi:
            raise ValidationError(
                f"descending interval [{self.lo}, {self.hi}] under strict validation"
            )

    @property
    def descending(self) -> bool:
        return self.lo > self.hi

    @property
    def sup(self) -> float:
        return max(self.lo, self.hi)

    def as_tuple(self) -> tuple[float, float]:
        return (self.lo, self.hi)


@dataclass(frozen=True)
class InValue:
    t: UnitInterval
    i: UnitInterval
    f: UnitInterval

    def __post_init__(self):
        for name in ("t", "i", "f"):
            if not isinstance(getattr(self, name), UnitInterval):
                raise ValidationError(f"{name}: expected a UnitInterval")

    @classmethod
    def from_bounds(cls, t, i, f, policy: Policy = Policy.STRICT) -> "InValue":
        """Build from three ``(lo, hi)`` pairs, validating under ``policy``."""
        parts = []
        for name, pair in (("t", t), ("i", i), ("f", f)):
            try:
                lo, hi = pair
            except (TypeError, ValueError):
                raise ValidationError(f"{name}: expected a [lo, hi] pair, got {pair!r}") from None
            try:
                parts.append(UnitInterval(lo, hi, policy))
            except ValidationError as exc:
                raise ValidationError(f"{name}.{exc}") from None
        return cls(*parts)

    @property
    def lenient(self) -> bool:
        """True if any bound pair is stored in descending order."""
        return self.t.descending or self.i.descending or self.f.descending

    def bounds(self) -> tuple[float, float, float, float, float, float]:
        """The six bounds ``(a, b, c, d, e, f)`` in storage order."""
        return (self.t.lo, self.t.hi, self.i.lo, self.i.hi, self.f.lo, self.f.hi)

    def as_tuple(self):
        return (self.t.as_tuple(), self.i.as_tuple(), self.f.as_tuple())


def complement_svn(v: SvnValue) -> SvnValue:
    return SvnValue(v.f, 1.0 - v.i, v.t)


def complement_in(v: InValue) -> InValue:
    # 1 - [lo, hi] swaps the bounds; on a descending pair that would silently
    # flip its orientation, so refuse it.
    if v.i.descending:
        raise ValidationError("cannot complement a descending indeterminacy interval")
    return InValue(
        UnitInterval(v.f.lo, v.f.hi, Policy.LENIENT),
        UnitInterval(1.0 - v.i.hi, 1.0 - v.i.lo),
        UnitInterval(v.t.lo, v.t.hi, Policy.LENIENT),
    )


def contains_svn(a: SvnValue, b: SvnValue) -> bool:
    """True if ``a`` is contained in ``b``: ``b`` has at least the truth and
    at most the indeterminacy and falsity of ``a``."""
    return a.t <= b.t and a.i >= b.i and a.f >= b.f


def contains_in(a: InValue, b: InValue) -> bool:
    return (
        a.t.lo <= b.t.lo
        and a.t.hi <= b.t.hi
        and a.i.lo >= b.i.lo
        and a.i.hi >= b.i.hi
        and a.f.lo >= b.f.lo
        and a.f.hi >= b.f.hi
    )


def _close(xs, ys, eps: float) -> bool:
    return all(abs(x - y) <= eps for x, y in zip(xs, ys))


def equals_svn(a: SvnValue, b: SvnValue, eps: float = EPS_EQ) -> bool:
    return _close(a.as_tuple(), b.as_tuple(), eps)


def equals_in(a: InValue, b: InValue, eps: float = EPS_EQ) -> bool:
    return _close(a.bounds(), b.bounds(), eps)


def absolute_svn() -> SvnValue:
    return SvnValue(1.0, 0.0, 0.0)


def null_svn() -> SvnValue:
    return SvnValue(0.0, 1.0, 1.0)


def absolute_in() -> InValue:
    return InValue.from_bounds((1.0, 1.0), (0.0, 0.0), (0.0, 0.0))


def null_in() -> InValue:
    return InValue.from_bounds((0.0, 0.0), (1.0, 1.0), (1.0, 1.0))
