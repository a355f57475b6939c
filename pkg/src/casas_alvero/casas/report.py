"""JSON-lines and CSV serialization of verification reports."""
from __future__ import annotations

import csv
import io
import json
from typing import Iterable

from .verify import VerificationReport

COLUMNS = ("n", "branch", "p", "order", "sm_count", "oracle_count", "pure_powers", "verdict", "elapsed_ms")


def report_dict(r: VerificationReport, timing: bool = False) -> dict:
    """Fields in fixed order; ``oracle_count`` only when the oracle ran.

    ``elapsed_ms`` is null unless ``timing`` is set, so default output is
    byte-identical across runs.
    """
    d = {"n": r.n, "branch": r.branch, "p": r.p, "order": r.order, "sm_count": r.sm_count}
    if r.oracle_count is not None:
        d["oracle_count"] = r.oracle_count
    d["pure_powers"] = dict(r.pure_powers)
    d["verdict"] = r.verdict
    d["elapsed_ms"] = r.elapsed_ms if timing else None
    return d


def to_json_lines(reports: Iterable[VerificationReport], timing: bool = False) -> str:
    return "".join(json.dumps(report_dict(r, timing)) + "\n" for r in reports)


def _pp_text(pp: dict[str, int]) -> str:
    return ";".join(f"{k}={v}" for k, v in pp.items())


def to_csv(reports: Iterable[VerificationReport], timing: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in reports:
        d = report_dict(r, timing)
        w.writerow([
            d["n"], d["branch"], d["p"], d["order"],
            "" if d["sm_count"] is None else d["sm_count"],
            d.get("oracle_count", ""),
            _pp_text(d["pure_powers"]), d["verdict"],
            "" if d["elapsed_ms"] is None else d["elapsed_ms"],
        ])
    return buf.getvalue()


def to_text(reports: Iterable[VerificationReport], timing: bool = False) -> str:
    lines = []
    for r in reports:
        parts = [f"n={r.n}", f"branch={r.branch or '-'}", f"p={r.p}", f"order={r.order}",
                 f"sm_count={r.sm_count}"]
        if r.oracle_count is not None:
            parts.append(f"oracle_count={r.oracle_count}")
        parts.append(f"pure_powers={_pp_text(r.pure_powers) or '-'}")
        parts.append(f"verdict={r.verdict}")
        if timing and r.elapsed_ms is not None:
            parts.append(f"elapsed_ms={r.elapsed_ms}")
        lines.append(" ".join(parts))
        if r.detail:
            lines.append(f"  note: {r.detail}")
    return "\n".join(lines) + "\n"


def parse_json_lines(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]
