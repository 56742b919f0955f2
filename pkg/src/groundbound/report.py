"""Deterministic report records and renderers (text / json / csv).

Every numeric cell is either an exact integer/rational string or a
fixed-precision decimal computed from a certified enclosure midpoint at a
fixed bit count, so byte-identical output across runs and worker counts
is a property of the data, not of formatting luck.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .balls import Expr, as_expr, ball_str

DECIMAL_DIGITS = 12


def render_value(x) -> dict:
    """{'decimal': ..., 'exact': ...} for an exact or expression value."""
    if isinstance(x, bool):
        return {"decimal": str(x).lower(), "exact": str(x).lower()}
    if isinstance(x, int):
        return {"decimal": str(x), "exact": str(x)}
    if isinstance(x, Fraction):
        return {"decimal": ball_str(as_expr(x), DECIMAL_DIGITS), "exact": str(x)}
    if isinstance(x, Expr):
        return {"decimal": ball_str(x, DECIMAL_DIGITS), "exact": str(x)}
    if x is None:
        return {"decimal": "", "exact": ""}
    return {"decimal": str(x), "exact": str(x)}


@dataclass(frozen=True)
class Record:
    """One report line: a pipeline result with its provenance."""

    pipeline: str
    case: str
    inputs: dict
    result: int | str | None
    paper_expected: int | None
    match: bool | None
    note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "pipeline": self.pipeline,
            "case": self.case,
            "inputs": {k: render_value(v) for k, v in sorted(self.inputs.items())},
            "result": self.result,
            "paper_expected": self.paper_expected,
            "match": self.match,
            "note": self.note,
        }


@dataclass
class Report:
    title: str
    records: list = field(default_factory=list)
    sections: list = field(default_factory=list)  # (heading, [Record])

    def add_section(self, heading: str, records) -> None:
        records = list(records)
        self.sections.append((heading, records))
        self.records.extend(records)

    @property
    def mismatch_count(self) -> int:
        return sum(1 for r in self.records if r.match is False)

    # -- renderers ---------------------------------------------------------

    def to_text(self) -> str:
        out = [self.title, "=" * len(self.title)]
        for heading, records in self.sections:
            out.append("")
            out.append(heading)
            out.append("-" * len(heading))
            for r in records:
                status = {True: "ok", False: "MISMATCH", None: "--"}[r.match]
                expected = "" if r.paper_expected is None else f" expected={r.paper_expected}"
                line = f"[{status:>8}] {r.pipeline:<14} {r.case:<34} result={r.result}{expected}"
                out.append(line)
                if r.note:
                    out.append(f"           note: {r.note}")
                for key in sorted(r.inputs):
                    val = render_value(r.inputs[key])
                    out.append(f"           {key} = {val['decimal']}  ({val['exact']})")
        out.append("")
        out.append(f"mismatches: {self.mismatch_count}")
        return "\n".join(out) + "\n"

    def to_json(self) -> str:
        payload = {
            "title": self.title,
            "sections": [
                {"heading": heading, "records": [r.to_json_dict() for r in records]}
                for heading, records in self.sections
            ],
            "mismatches": self.mismatch_count,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["section", "pipeline", "case", "result",
                         "paper_expected", "match", "note", "inputs"])
        for heading, records in self.sections:
            for r in records:
                inputs = ";".join(
                    f"{k}={render_value(v)['decimal']}" for k, v in sorted(r.inputs.items())
                )
                writer.writerow([heading, r.pipeline, r.case, r.result,
                                 "" if r.paper_expected is None else r.paper_expected,
                                 "" if r.match is None else str(r.match).lower(),
                                 r.note, inputs])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "text":
            return self.to_text()
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unknown format {fmt!r}")


def case_table_csv(rows) -> str:
    """CSV mirroring the per-case listings: one row per case."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "s", "k", "r", "p", "variant", "m", "M",
                     "B", "R", "S", "N", "bound", "paper_bound", "match"])
    for row in rows:
        case = row.case
        prob = row.problem
        writer.writerow([
            case.family.value,
            "" if case.s is None else case.s,
            "" if case.k is None else case.k,
            "" if case.r is None else case.r,
            "" if case.p is None else case.p,
            row.variant.value if row.variant else "",
            row.m,
            "" if prob is None else prob.m_field_degree,
            "" if prob is None else ball_str(prob.b_disc_root, DECIMAL_DIGITS),
            "" if prob is None else ball_str(prob.r_ratio, DECIMAL_DIGITS),
            "" if prob is None else ball_str(prob.s_factor, DECIMAL_DIGITS),
            "" if row.least_n is None else row.least_n,
            row.bound,
            "" if row.published_bound is None else row.published_bound,
            "" if row.match is None else str(row.match).lower(),
        ])
    return buf.getvalue()


def parse_pair_table(text: str) -> list[dict]:
    """Parse the machine-readable pair report back into dictionaries."""
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        rec = {}
        for item in line.split("|"):
            key, _, value = item.partition("=")
            if key in ("k", "s", "field_degree", "bound_KF", "bound_K", "final_bound"):
                rec[key] = int(value)
            elif key in ("refined_KF", "published_bound_KF", "published_bound_K"):
                rec[key] = int(value) if value else None
            elif key == "coefficient":
                rec[key] = float(value)
            elif key == "intermediates_match":
                rec[key] = None if not value else value == "true"
            else:
                rec[key] = value
        out.append(rec)
    return out


def pair_table_lines(reports) -> list[str]:
    """Machine-readable search report: one record per surviving pair."""
    out = []
    for r in reports:
        fields = [
            f"kind={r.kind.value}", f"k={r.k}", f"s={r.s}",
            f"coefficient={r.coefficient:.12e}", f"field_degree={r.field_degree}",
            f"bound_KF={r.bound_kf}", f"bound_K={r.bound_k}",
            f"refined_KF={'' if r.refined_kf is None else r.refined_kf}",
            f"final_bound={r.final_bound}",
            f"published_bound_KF={'' if r.published_bound_kf is None else r.published_bound_kf}",
            f"published_bound_K={'' if r.published_bound_k is None else r.published_bound_k}",
            f"intermediates_match={'' if r.intermediates_match is None else str(r.intermediates_match).lower()}",
        ]
        out.append("|".join(fields))
    return out
