"""High-precision reference formulas, written independently of the package."""

from fractions import Fraction

from mpmath import mp, mpf

mp.dps = 50


def _m(x):
    return mpf(repr(float(x)))


def _wprod(xs, ws):
    r = mpf(1)
    for x, w in zip(xs, ws):
        if w == 0:
            continue
        r *= x ** w
    return r


def svn_arith(row, weights):
    ws = [_m(w) for w in weights]
    return (
        1 - _wprod([1 - _m(v[0]) for v in row], ws),
        _wprod([_m(v[1]) for v in row], ws),
        _wprod([_m(v[2]) for v in row], ws),
    )


def svn_geom(row, weights):
    ws = [_m(w) for w in weights]
    return (
        _wprod([_m(v[0]) for v in row], ws),
        1 - _wprod([1 - _m(v[1]) for v in row], ws),
        1 - _wprod([1 - _m(v[2]) for v in row], ws),
    )


def in_op(row, weights, op):
    """Interval aggregate as ((tl, tu), (il, iu), (fl, fu))."""
    lo = op([tuple(p[0] for p in v) for v in row], weights)
    hi = op([tuple(p[1] for p in v) for v in row], weights)
    return tuple(zip(lo, hi))


def K(t, i, f):
    return (1 + t - 2 * i - f) / 2


def M(t, i, f):
    return t - i * (1 - t) - f * (1 - i)


def L(a, b, c, d, e, f):
    return (2 + a + b - 2 * c - 2 * d - e - f) / 4


def N(a, b, c, d, e, f):
    return (a + b - d * (1 - b) - c * (1 - a) - f * (1 - c) - e * (1 - d)) / 2


def exact(x):
    """Decimal literal of a float as an exact fraction."""
    return Fraction(repr(float(x)))
