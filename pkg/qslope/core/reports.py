# MIT License

# Copyright (c) 2026 The qslope developers

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

from __future__ import annotations

from qslope.core.pd import serialize_pd
from qslope.enums import OutputFormat
from qslope._helpers import format_number

import csv
import io
import json
import typing

if typing.TYPE_CHECKING:
    from qslope.models.catalog import CatalogEntry, Report
    from qslope.models.diagrams import Diagram

__all__ = (
    "CSV_COLUMNS",
    "VERDICT_ORDER",
    "render",
    "render_text",
    "render_json",
    "render_csv",
    "render_catalog",
)

VERDICT_ORDER = (
    "adequate",
    "alternating",
    "adequate_span",
    "alternating_span",
    "surface_adequate",
    "surface_alternating",
    "surface_ratio",
    "jones_surfaces",
)
"""The order verdicts are evaluated and reported in."""

CSV_COLUMNS = (
    "label",
    "crossings",
    "c_plus",
    "c_minus",
    "writhe",
    "v_A",
    "v_B",
    "a_adequate",
    "b_adequate",
    "g_T_diagram",
    "n",
    "four_d_minus",
    "four_d_plus",
    "lower_bound",
    "upper_bound",
    "js",
    "js_star",
    "jx",
    "jx_star",
    "fit_exact",
    *VERDICT_ORDER,
)
"""The fixed column order of CSV reports. One row is written per diagram
and color; diagram level values repeat on every row of the diagram.
"""

MINIMALITY_NOTE = "c and g_T are taken from the supplied diagram, which is assumed to realize the crossing number."

Row = typing.Sequence[typing.Any]


def _table(headers: Row, rows: typing.Iterable[Row], indent: str = "  ") -> typing.List[str]:
    cells = [[format_number(v) for v in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))

    def line(row: Row) -> str:
        return (indent + "  ".join(str(cell).ljust(w) for cell, w in zip(row, widths))).rstrip()

    return [line(headers), line(["-" * w for w in widths]), *(line(row) for row in cells)]

def _pairs(data: typing.Mapping[str, typing.Any], indent: str = "  ") -> typing.List[str]:
    width = max((len(k) for k in data), default=0)
    return [f"{indent}{key.ljust(width)}  {format_number(value)}" for key, value in data.items()]

def _record_text(record: typing.Dict[str, typing.Any]) -> typing.List[str]:
    lines = [f"== {record['label'] or '(unlabelled)'} =="]

    diagram = {k: record[k] for k in ("crossings", "c_plus", "c_minus", "writhe") if k in record}
    lines.append("diagram")
    lines.extend(_pairs(diagram))

    if "summary" in record:
        lines.append("state summary")
        lines.extend(_pairs(record["summary"]))

    if "surfaces" in record:
        lines.append("state surfaces")
        lines.extend(_table(
            ("side", "euler", "boundary", "slope"),
            [(s["side"], s["euler"], s["boundary_components"], s["slope"]) for s in record["surfaces"]],
        ))

    if "jones" in record:
        lines.append("colored jones")
        lines.extend(_table(
            ("n", "4d-", "4d+", "J(n) in t"),
            [(j["n"], j["four_d_minus"], j["four_d_plus"], j["t"]) for j in record["jones"]],
        ))

    if "bounds" in record:
        bounds = record["bounds"]
        lines.append("degrees and bounds")
        lines.extend(_table(
            ("n", "4d-", "lower", "4d+", "upper", "refined A", "refined B"),
            [
                (e["n"], e["four_d_minus"], e["lower"], e["four_d_plus"], e["upper"], e["refined_lower"], e["refined_upper"])
                for e in bounds["entries"]
            ],
        ))
        lines.extend(_pairs({k: v for k, v in bounds.items() if k not in ("entries", "label")}))
    elif "degrees" in record:
        lines.append("degrees")
        lines.extend(_table(("n", "4d-", "4d+"), record["degrees"]))

    if "fit" in record:
        fit = record["fit"]
        lines.append(f"quasi-polynomial fit (period {fit['period']}, from n = {fit['fit_start']})")
        lines.extend(_table(
            ("r", "a", "b", "c", "a*", "b*", "c*"),
            [(r, *plus, *minus) for r, (plus, minus) in enumerate(zip(fit["plus"], fit["minus"]))],
        ))
        lines.extend(_pairs({"exact": fit["exact"]}))
        if fit["residuals"]:
            lines.extend(_table(("n", "side", "residual"), fit["residuals"]))

    if "slopes" in record:
        lines.append("jones slopes")
        lines.extend(_pairs(record["slopes"]))

    if "characterization" in record:
        report = record["characterization"]
        lines.append(f"characterization (c = {report['c']}, g_T = {report['g_T']})")
        lines.extend(_table(
            ("verdict", "status", "equation"),
            [(v["name"], v["status"], v["equation"]) for v in report["verdicts"].values()],
        ))
        for verdict in report["verdicts"].values():
            lines.append(f"  {verdict['name']} witnesses")
            lines.extend(_pairs(verdict["witnesses"], indent="    "))
        lines.append(f"  note: {MINIMALITY_NOTE}")

    return lines

def render_text(report: Report) -> str:
    r"""Renders the human section: aligned tables followed by provenance and wall time."""
    data = report.to_dict()
    lines = [f"qslope {data['command']}", ""]
    for record in data["records"]:
        lines.extend(_record_text(record))
        lines.append("")

    lines.append("provenance")
    lines.extend(_pairs({**data["provenance"], "wall_time": f"{report.elapsed:.3f}s"}))
    return "\n".join(lines) + "\n"

def render_json(report: Report) -> str:
    r"""Renders the machine section. Identical input gives identical output."""
    return json.dumps(report.to_dict(), indent=2) + "\n"

def _cell(value: typing.Any) -> str:
    if value is None:
        return ""
    if isinstance(value, list):
        return ";".join(_cell(v) for v in value)
    return format_number(value)

def _csv_rows(record: typing.Dict[str, typing.Any]) -> typing.List[typing.Dict[str, typing.Any]]:
    base: typing.Dict[str, typing.Any] = {k: record.get(k) for k in ("label", "crossings", "c_plus", "c_minus", "writhe")}
    base.update(record.get("summary", {}))
    for key in ("loops_A", "loops_B"):
        base.pop(key, None)

    if "slopes" in record:
        base.update(record["slopes"])
    if "fit" in record:
        base["fit_exact"] = record["fit"]["exact"]
    if "characterization" in record:
        for name, verdict in record["characterization"]["verdicts"].items():
            base[name] = verdict["status"]

    degrees: typing.Dict[int, typing.Dict[str, typing.Any]] = {}
    for n, lo, hi in record.get("degrees", ()):
        degrees[n] = {"n": n, "four_d_minus": lo, "four_d_plus": hi}
    for entry in record.get("jones", ()):
        degrees[entry["n"]] = {"n": entry["n"], "four_d_minus": entry["four_d_minus"], "four_d_plus": entry["four_d_plus"]}
    for entry in record.get("bounds", {}).get("entries", ()):
        degrees[entry["n"]].update(lower_bound=entry["lower"], upper_bound=entry["upper"])

    if not degrees:
        return [base]
    return [{**base, **degrees[n]} for n in sorted(degrees)]

def render_csv(report: Report) -> str:
    r"""Renders the records as CSV with the columns of :data:`CSV_COLUMNS`."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in report.to_dict()["records"]:
        for row in _csv_rows(record):
            writer.writerow([_cell(row.get(column)) for column in CSV_COLUMNS])
    return buffer.getvalue()

def render(report: Report, fmt: str = OutputFormat.TEXT) -> str:
    r"""Renders a report in one of the :class:`OutputFormat` formats."""
    if fmt == OutputFormat.JSON:
        return render_json(report)
    if fmt == OutputFormat.CSV:
        return render_csv(report)
    if fmt == OutputFormat.TEXT:
        return render_text(report)
    raise ValueError(f"unknown output format {fmt!r}")

def render_catalog(entries: typing.Sequence[CatalogEntry], fmt: str = OutputFormat.TEXT, *, details: bool = False) -> str:
    r"""Renders catalog entries, either as an overview or with every diagram
    when ``details`` is set.
    """
    if fmt == OutputFormat.JSON:
        if details:
            return json.dumps([e.to_dict() for e in entries], indent=2) + "\n"
        return json.dumps([e.label for e in entries], indent=2) + "\n"

    rows = [
        (e.label, e.crossing_number, e.alternating, list(e.variants))
        for e in entries
    ]
    if fmt == OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(("label", "crossing_number", "alternating", "variants"))
        for row in rows:
            writer.writerow([_cell(v) for v in row])
        return buffer.getvalue()
    if fmt != OutputFormat.TEXT:
        raise ValueError(f"unknown output format {fmt!r}")

    lines = _table(("label", "crossings", "alternating", "variants"), rows, indent="")
    if details:
        for entry in entries:
            lines.append("")
            lines.append(f"== {entry.label} ==")
            diagrams = {entry.label: entry.minimal_diagram, **entry.variants}
            lines.extend(_pairs({label: _diagram_text(d) for label, d in diagrams.items()}))
    return "\n".join(lines) + "\n"

def _diagram_text(d: Diagram) -> str:
    text = serialize_pd(d) or "(no crossings)"
    if d.free_loops:
        text += f" + {d.free_loops} free loop(s)"
    return text
