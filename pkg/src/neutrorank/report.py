"""Text and JSON renderings of a ranking report."""

from __future__ import annotations

import json

from .core import InValue
from .decision import RankingReport
from .ranking import DecidedBy


def _fmt_value(v, precision: int) -> str:
    f = f"{{:.{precision}f}}"
    if isinstance(v, InValue):
        return "(" + ", ".join(f"[{f.format(lo)}, {f.format(hi)}]" for lo, hi in v.as_tuple()) + ")"
    return "(" + ", ".join(f.format(x) for x in v.as_tuple()) + ")"


def _notes(report: RankingReport) -> dict[str, list[str]]:
    notes: dict[str, list[str]] = {r.name: [] for r in report.rows}
    for ev in report.tie_events:
        a, b = ev.pair
        if ev.decided_by is DecidedBy.ACCURACY:
            notes[a].append(f"score tie with {b}, accuracy higher")
            notes[b].append(f"score tie with {a}, accuracy lower")
        else:
            notes[a].append(f"tied with {b}")
            notes[b].append(f"tied with {a}")
    return notes


def render_table(report: RankingReport, precision: int = 4) -> str:
    notes = _notes(report)
    f = f"{{:.{precision}f}}"
    header = ["Rank", "Alternative", "Aggregate", "Score", "Accuracy", "Note"]
    body = [
        [
            str(r.rank),
            r.name,
            _fmt_value(r.aggregate, precision),
            f.format(r.score),
            "" if r.accuracy is None else f.format(r.accuracy),
            "; ".join(notes[r.name]),
        ]
        for r in report.rows
    ]
    widths = [max(len(row[c]) for row in [header] + body) for c in range(len(header))]
    lines = [f"{report.kind} matrix, {report.operator.value} aggregation"]
    for row in [header] + body:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    lines.append("Order: " + " > ".join(_order_groups(report)))
    return "\n".join(lines) + "\n"


def _order_groups(report: RankingReport) -> list[str]:
    groups: list[list[str]] = []
    last = None
    for r in report.rows:
        if r.rank == last:
            groups[-1].append(r.name)
        else:
            groups.append([r.name])
        last = r.rank
    return [" = ".join(g) for g in groups]


def _encode(v):
    if isinstance(v, InValue):
        return [list(p) for p in v.as_tuple()]
    return list(v.as_tuple())


def report_to_dict(report: RankingReport) -> dict:
    return {
        "kind": report.kind,
        "operator": report.operator.value,
        "rows": [
            {
                "rank": r.rank,
                "alternative": r.name,
                "aggregate": _encode(r.aggregate),
                "score": r.score,
                "accuracy": r.accuracy,
            }
            for r in report.rows
        ],
        "tie_events": [
            {"pair": list(ev.pair), "decided_by": ev.decided_by.value} for ev in report.tie_events
        ],
    }


def render_json(report: RankingReport) -> str:
    # json writes floats with repr, i.e. the shortest exact round-trip form
    return json.dumps(report_to_dict(report), indent=2) + "\n"
