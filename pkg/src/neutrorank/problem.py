"""Reading and writing decision problems (JSON and CSV).

JSON layout::

    {
      "kind": "svn" | "interval",
      "criteria": [{"name": "C1", "weight": 0.35}, ...],
      "alternatives": [{"name": "A1", "values": [...]}, ...],
      "options": {"validation": "strict", "operator": "arithmetic"}
    }

SVN values are ``[t, i, f]`` triples; interval values are
``[[tl, tu], [il, iu], [fl, fu]]``.  ``options`` is optional.

CSV layout: a header ``alternative,C1.t,C1.i,C1.f,...`` (interval columns
are ``C1.t.lo,C1.t.hi,C1.i.lo,...``), one row per alternative, and the
weights either passed separately or in a ``#weights,0.35,0.25,0.40`` row.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .aggregation import EPS_W, Operator
from .core import InValue, NeutroError, Policy, SvnValue, ValidationError
from .decision import DecisionMatrix

KINDS = ("svn", "interval")
_PARTS = ("t", "i", "f")


class ParseError(NeutroError, ValueError):
    """The input is not well-formed JSON/CSV or does not follow the layout."""


class DocumentError(ValidationError):
    """One or more invariants of a problem document are violated."""

    def __init__(self, diagnostics: Sequence[str]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


@dataclass(frozen=True)
class Criterion:
    name: str
    weight: float


@dataclass(frozen=True)
class Alternative:
    name: str
    values: tuple


@dataclass(frozen=True)
class Options:
    validation: Policy = Policy.STRICT
    operator: Operator = Operator.ARITHMETIC


@dataclass(frozen=True)
class ProblemDocument:
    kind: str
    criteria: tuple[Criterion, ...]
    alternatives: tuple[Alternative, ...]
    options: Options = field(default_factory=Options)

    def to_matrix(self) -> DecisionMatrix:
        return DecisionMatrix(
            alternatives=[a.name for a in self.alternatives],
            criteria=[c.name for c in self.criteria],
            weights=[c.weight for c in self.criteria],
            entries=[a.values for a in self.alternatives],
            policy=self.options.validation,
        )


def _read_text(source) -> str:
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    elif isinstance(source, str):
        return source
    else:
        data = source.read()
        if isinstance(data, str):
            return data
    try:
        return data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not UTF-8: {exc}") from None


def _number(x, where: str, diags: list) -> Optional[float]:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        diags.append(f"{where}: expected a number, got {x!r}")
        return None
    x = float(x)
    if not math.isfinite(x):
        diags.append(f"{where}: non-finite number {x!r}")
        return None
    return x


def _degree(x, where: str, diags: list) -> Optional[float]:
    x = _number(x, where, diags)
    if x is not None and not 0.0 <= x <= 1.0:
        diags.append(f"{where}: degree {x!r} outside [0, 1]")
        return None
    return x


def _build_value(kind, raw, where: str, policy: Policy, diags: list):
    """Validate one matrix cell, appending diagnostics instead of raising."""
    if not isinstance(raw, (list, tuple)) or len(raw) != 3:
        diags.append(f"{where}: expected a [t, i, f] triple, got {raw!r}")
        return None
    n_before = len(diags)
    if kind == "svn":
        parts = [_degree(x, f"{where}, field {p}", diags) for p, x in zip(_PARTS, raw)]
        if len(diags) > n_before:
            return None
        return SvnValue(*parts)

    pairs = []
    for p, pair in zip(_PARTS, raw):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            diags.append(f"{where}, field {p}: expected a [lo, hi] pair, got {pair!r}")
            continue
        lo = _degree(pair[0], f"{where}, field {p}.lo", diags)
        hi = _degree(pair[1], f"{where}, field {p}.hi", diags)
        if lo is not None and hi is not None and lo > hi and policy is Policy.STRICT:
            diags.append(
                f"{where}, field {p}: descending interval [{lo!r}, {hi!r}] under strict validation"
            )
        pairs.append((lo, hi))
    if len(diags) > n_before:
        return None
    return InValue.from_bounds(*pairs, policy=policy)


def _assemble(kind, criteria_raw, alternatives_raw, options: Options) -> ProblemDocument:
    """Validate the decoded pieces of a document; collect every violation."""
    diags: list[str] = []
    if kind not in KINDS:
        raise DocumentError([f"kind: expected one of {KINDS}, got {kind!r}"])

    criteria = []
    for s, c in enumerate(criteria_raw):
        name = c.get("name") if isinstance(c, dict) else None
        if not isinstance(name, str) or not name:
            diags.append(f"criterion #{s + 1}: missing name")
            name = f"#{s + 1}"
        w = _number(c.get("weight") if isinstance(c, dict) else None, f"criterion {name!r}, weight", diags)
        if w is not None and not 0.0 <= w <= 1.0:
            diags.append(f"criterion {name!r}, weight: {w!r} outside [0, 1]")
        criteria.append(Criterion(name, w))
    if not criteria:
        diags.append("no criteria")
    elif all(c.weight is not None for c in criteria):
        total = math.fsum(c.weight for c in criteria)
        if abs(total - 1.0) > EPS_W:
            diags.append(f"weights: sum to {total!r}, expected 1 (tolerance {EPS_W})")
    _duplicates([c.name for c in criteria], "criterion", diags)

    alternatives = []
    if not alternatives_raw:
        diags.append("no alternatives")
    for k, a in enumerate(alternatives_raw):
        name = a.get("name") if isinstance(a, dict) else None
        if not isinstance(name, str) or not name:
            diags.append(f"alternative #{k + 1}: missing name")
            name = f"#{k + 1}"
        values = a.get("values") if isinstance(a, dict) else None
        if not isinstance(values, (list, tuple)):
            diags.append(f"alternative {name!r}: missing values list")
            continue
        if len(values) != len(criteria):
            diags.append(
                f"alternative {name!r}: {len(values)} values for {len(criteria)} criteria"
            )
            continue
        cells = tuple(
            _build_value(kind, raw, f"alternative {name!r}, criterion {c.name!r}", options.validation, diags)
            for c, raw in zip(criteria, values)
        )
        alternatives.append(Alternative(name, cells))
    _duplicates([a.name for a in alternatives], "alternative", diags)

    if diags:
        raise DocumentError(diags)
    return ProblemDocument(kind, tuple(criteria), tuple(alternatives), options)


def _duplicates(names, what, diags):
    seen = set()
    for n in names:
        if n in seen:
            diags.append(f"{what} {n!r}: duplicate name")
        seen.add(n)


def _options(raw, validation=None, operator=None) -> Options:
    raw = raw or {}
    if not isinstance(raw, dict):
        raise DocumentError([f"options: expected an object, got {raw!r}"])
    try:
        return Options(
            Policy(validation or raw.get("validation", Policy.STRICT.value)),
            Operator(operator or raw.get("operator", Operator.ARITHMETIC.value)),
        )
    except ValueError as exc:
        raise DocumentError([f"options: {exc}"]) from None


def _parse_json(text: str, validation, operator) -> ProblemDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    for key in ("kind", "criteria", "alternatives"):
        if key not in doc:
            raise ParseError(f"missing top-level key {key!r}")
    if not isinstance(doc["criteria"], list) or not isinstance(doc["alternatives"], list):
        raise ParseError("'criteria' and 'alternatives' must be arrays")
    opts = _options(doc.get("options"), validation, operator)
    return _assemble(doc["kind"], doc["criteria"], doc["alternatives"], opts)


def _csv_float(cell: str, where: str):
    # float() ignores locale; reject anything it cannot read, e.g. "0,5"
    try:
        return float(cell.strip())
    except ValueError:
        raise ParseError(f"{where}: not a number: {cell!r}") from None


def _parse_csv(text: str, weights, validation, operator) -> ProblemDocument:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    weight_rows = [r for r in rows if r[0].strip().lower() == "#weights"]
    rows = [r for r in rows if not r[0].strip().startswith("#")]
    if not rows:
        raise ParseError("CSV input has no header row")
    header = [h.strip() for h in rows[0]]
    if header[0].lower() != "alternative":
        raise ParseError(f"first header column must be 'alternative', got {header[0]!r}")
    cols = header[1:]
    kind = "interval" if any(c.endswith((".lo", ".hi")) for c in cols) else "svn"
    suffixes = (
        [f"{p}.{b}" for p in _PARTS for b in ("lo", "hi")] if kind == "interval" else list(_PARTS)
    )
    width = len(suffixes)
    if not cols or len(cols) % width:
        raise ParseError(f"{len(cols)} value columns is not a multiple of {width}")
    names = []
    for s in range(0, len(cols), width):
        group = cols[s : s + width]
        name = group[0].rsplit(".", 2 if kind == "interval" else 1)[0]
        expected = [f"{name}.{x}" for x in suffixes]
        if group != expected:
            raise ParseError(f"header columns {group} do not match expected {expected}")
        names.append(name)

    if weights is None:
        if not weight_rows:
            raise ParseError("no weights: add a '#weights' row or pass weights explicitly")
        if len(weight_rows) > 1:
            raise ParseError("more than one '#weights' row")
        weights = [_csv_float(c, "#weights") for c in weight_rows[0][1:] if c.strip()]
    if len(weights) != len(names):
        raise DocumentError([f"weights: {len(weights)} weights for {len(names)} criteria"])

    alternatives = []
    for r in rows[1:]:
        name = r[0].strip()
        cells = r[1:]
        if len(cells) != len(cols):
            raise DocumentError(
                [f"alternative {name!r}: {len(cells)} value columns, expected {len(cols)}"]
            )
        nums = [_csv_float(c, f"alternative {name!r}, column {h!r}") for c, h in zip(cells, cols)]
        values = []
        for s in range(0, len(nums), width):
            g = nums[s : s + width]
            values.append(g if kind == "svn" else [g[0:2], g[2:4], g[4:6]])
        alternatives.append({"name": name, "values": values})

    criteria = [{"name": n, "weight": w} for n, w in zip(names, weights)]
    return _assemble(kind, criteria, alternatives, _options(None, validation, operator))


def parse_problem(source, fmt: str = "json", *, weights=None, validation=None, operator=None) -> ProblemDocument:
    """Parse and validate a decision problem.

    ``source`` may be ``str``, ``bytes`` or a readable file object.
    ``validation`` and ``operator`` override the document's own options;
    ``weights`` supplies CSV weights in place of a ``#weights`` row.

    Raises ``ParseError`` for malformed input and ``DocumentError`` (a
    ``ValidationError``) listing every violated invariant.
    """
    text = _read_text(source)
    if fmt == "json":
        return _parse_json(text, validation, operator)
    if fmt == "csv":
        return _parse_csv(text, weights, validation, operator)
    raise ValueError(f"unknown format {fmt!r}")


def _encode_value(v):
    if isinstance(v, InValue):
        return [list(p) for p in v.as_tuple()]
    return list(v.as_tuple())


def render_problem(doc: ProblemDocument) -> str:
    """Serialise ``doc`` as JSON; floats keep full (round-trip) precision."""
    obj = {
        "kind": doc.kind,
        "criteria": [{"name": c.name, "weight": c.weight} for c in doc.criteria],
        "alternatives": [
            {"name": a.name, "values": [_encode_value(v) for v in a.values]}
            for a in doc.alternatives
        ],
        "options": {
            "validation": doc.options.validation.value,
            "operator": doc.options.operator.value,
        },
    }
    return json.dumps(obj, indent=2) + "\n"
