"""CSV, JSON and DOT serialisation.  All output is sorted and byte-stable."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, List, Optional, Sequence

from .complexity import ComplexityRow
from .rauzy import LieCycle, RauzyGraph, lie_cycles

PROFILE_FIELDS = ("n", "p", "delta_p", "lie_bruteforce", "lie_rauzy",
                  "lie_formula", "bound_ok", "case_tag")
FORMULA_FIELDS = ("n", "lie_formula", "case_tag")
CHECK_FIELDS = ("check", "n", "ok", "detail")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _csv(fields: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for r in rows:
        w.writerow([_cell(v) for v in r])
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def row_dict(row: ComplexityRow, fields: Sequence[str] = PROFILE_FIELDS) -> dict:
    return {f: getattr(row, f) for f in fields}


def profile_csv(rows: Iterable[ComplexityRow], fields: Sequence[str] = PROFILE_FIELDS) -> str:
    return _csv(fields, ([getattr(r, f) for f in fields] for r in rows))


def profile_json(rows: Iterable[ComplexityRow], fields: Sequence[str] = PROFILE_FIELDS,
                 source: Optional[str] = None) -> str:
    return _json({"source": source, "fields": list(fields),
                  "rows": [row_dict(r, fields) for r in rows]})


def checks_csv(checks) -> str:
    return _csv(CHECK_FIELDS, ((c.name, c.n, c.ok, c.detail) for c in checks))


def checks_json(checks, source: Optional[str] = None) -> str:
    return _json({"source": source, "ok": all(c.ok for c in checks),
                  "checks": [{"check": c.name, "n": c.n, "ok": c.ok, "detail": c.detail}
                             for c in checks]})


def _cycle_ids(cycles: List[LieCycle]) -> dict:
    return {e: i for i, c in enumerate(cycles) for e in c.walk}


def graph_dict(graph: RauzyGraph, cycles: Optional[List[LieCycle]] = None) -> dict:
    if cycles is None:
        cycles = lie_cycles(graph)
    ids = _cycle_ids(cycles)
    return {
        "order": graph.order,
        "certified": graph.certified,
        "vertices": sorted(graph.vertices),
        "edges": [{"label": e, "start": e[:-1], "end": e[1:], "liecycle": ids.get(e)}
                  for e in sorted(graph.edges)],
        "lie_cycles": [{"id": i, "length": c.length, "edges": list(c.walk)}
                       for i, c in enumerate(cycles)],
    }


def graph_json(graphs: Iterable[RauzyGraph], source: Optional[str] = None) -> str:
    return _json({"source": source, "graphs": [graph_dict(g) for g in graphs]})


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _vlabel(v: str) -> str:
    return v if v else "ε"


def graph_dot(graph: RauzyGraph, cycles: Optional[List[LieCycle]] = None) -> str:
    """One ``digraph`` block; Lie-cycle edges carry ``liecycle=<id>``."""
    if cycles is None:
        cycles = lie_cycles(graph)
    ids = _cycle_ids(cycles)
    lines = [f"digraph rauzy_{graph.order} {{"]
    for v in sorted(graph.vertices):
        lines.append(f"  {_q(v)} [label={_q(_vlabel(v))}];")
    for e in sorted(graph.edges):
        attrs = [f"label={_q(e)}"]
        if e in ids:
            attrs.append(f"liecycle={ids[e]}")
        lines.append(f"  {_q(e[:-1])} -> {_q(e[1:])} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
