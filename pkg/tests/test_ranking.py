import pytest
from hypothesis import given

from neutrorank import (
    DecidedBy,
    InValue,
    Relation,
    SvnValue,
    absolute_in,
    absolute_svn,
    accuracy_in,
    accuracy_svn,
    compare,
    compare_in,
    compare_svn,
    complement_in,
    complement_svn,
    null_in,
    null_svn,
    score_in,
    score_svn,
)
from neutrorank.ranking import compare_keys

import cases
from conftest import in_values, svn_values


def iv(*pairs, policy="strict"):
    return InValue.from_bounds(*pairs, policy=policy)


A1, A2 = (SvnValue(*v) for v in cases.SVN_PAIR)
I1 = iv(*cases.IN_PAIR[0], policy="lenient")
I2 = iv(*cases.IN_PAIR[1])


def test_score_svn_published():
    assert score_svn(A1) == 0.25
    assert score_svn(A2) == 0.3


def test_score_svn_extremes():
    assert score_svn(absolute_svn()) == 1.0
    assert score_svn(null_svn()) == -1.0


def test_score_in():
    assert score_in(I1) == 0.45
    # Eq. value with f-bounds (0.1, 0.4); the published 0.32 used 0.3 for the upper bound
    assert score_in(I2) == 0.3
    assert score_in(iv((0.1, 0.6), (0.2, 0.3), (0.1, 0.3))) == 0.325
    assert score_in(absolute_in()) == 1.0
    assert score_in(null_in()) == -1.0


def test_accuracy_svn_published():
    assert accuracy_svn(A1) == pytest.approx(-0.08, abs=1e-12)
    assert accuracy_svn(A2) == pytest.approx(0.32, abs=1e-12)
    assert accuracy_svn(absolute_svn()) == 1.0


def test_accuracy_in():
    assert accuracy_in(I1) == pytest.approx(0.26, abs=1e-12)
    assert accuracy_in(I2) == pytest.approx(0.005, abs=1e-12)
    assert accuracy_in(absolute_in()) == 1.0


def test_accuracy_in_depends_on_bound_order():
    strict_twin = iv((0.4, 0.6), (0.1, 0.3), (0.1, 0.3))
    assert score_in(strict_twin) == score_in(I1)
    assert accuracy_in(strict_twin) != pytest.approx(accuracy_in(I1), abs=1e-3)


def test_compare_svn_by_score():
    o = compare_svn(A1, A2)
    assert (o.relation, o.decided_by) == (Relation.LESS, DecidedBy.SCORE)
    assert compare_svn(A2, A1).relation is Relation.GREATER


def test_compare_svn_by_accuracy():
    # both score 0.4; accuracies -0.02 and -0.2
    a, b = SvnValue(0.4, 0.1, 0.4), SvnValue(0.2, 0.0, 0.4)
    assert score_svn(a) == score_svn(b) == 0.4
    o = compare_svn(a, b)
    assert (o.relation, o.decided_by) == (Relation.GREATER, DecidedBy.ACCURACY)
    assert compare_svn(b, a).relation is Relation.LESS


def test_compare_svn_double_tie():
    a, b = SvnValue(0.4, 0.0, 0.4), SvnValue(0.2, 0.0, 0.2)
    o = compare_svn(a, b)
    assert (o.relation, o.decided_by) == (Relation.EQUAL, DecidedBy.TIE_POLICY)
    assert compare_svn(a, a).relation is Relation.EQUAL


def test_compare_in():
    o = compare_in(I1, I2)
    assert (o.relation, o.decided_by) == (Relation.GREATER, DecidedBy.SCORE)
    assert compare_in(I2, I2).decided_by is DecidedBy.TIE_POLICY
    a, b = iv((0.4, 0.4), (0.0, 0.0), (0.4, 0.4)), iv((0.2, 0.2), (0.0, 0.0), (0.2, 0.2))
    o = compare_in(a, b)
    assert (o.relation, o.decided_by) == (Relation.EQUAL, DecidedBy.TIE_POLICY)


def test_compare_in_by_accuracy():
    # both score 0.375; accuracies -0.25 and -0.125
    a = iv((0.0, 0.0), (0.0, 0.0), (0.0, 0.5))
    b = iv((0.0, 0.0), (0.0, 0.25), (0.0, 0.0))
    assert score_in(a) == score_in(b) == 0.375
    o = compare_in(a, b)
    assert (o.relation, o.decided_by) == (Relation.LESS, DecidedBy.ACCURACY)


def test_compare_mixed_kinds():
    with pytest.raises(TypeError):
        compare(A1, I2)


def test_accuracy_only_evaluated_on_tie():
    def boom():
        raise AssertionError("accuracy evaluated")

    assert compare_keys(0.5, boom, 0.1, boom).relation is Relation.GREATER


@given(svn_values)
def test_svn_ranges_and_duality(v):
    assert -1 <= score_svn(v) <= 1
    assert -1 <= accuracy_svn(v) <= 1
    assert score_svn(complement_svn(v)) == pytest.approx(-score_svn(v), abs=1e-12)


@given(in_values)
def test_in_ranges_and_duality(v):
    assert -1 <= score_in(v) <= 1
    assert -1 <= accuracy_in(v) <= 1
    assert score_in(complement_in(v)) == pytest.approx(-score_in(v), abs=1e-12)


@given(svn_values, svn_values)
def test_compare_antisymmetric(a, b):
    assert compare_svn(a, b).sign == -compare_svn(b, a).sign


@given(svn_values)
def test_score_condition_identities(v):
    # K = 0, 1, -1 exactly when t equals 2i + f - 1, 2i + f + 1, 2i + f - 3
    t, i, f = v.as_tuple()
    for target, shift in ((0, -1), (1, 1), (-1, -3)):
        moved = 2 * i + f + shift
        k = (1 + moved - 2 * i - f) / 2
        assert k == pytest.approx(target, abs=1e-12)
