"""Verdict records for inequality checks and their CSV serialization."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
import io
import os
from pathlib import Path
import tempfile

THEOREM_IDS = (
    "T1_four_points",
    "T2_double_perimeter",
    "T4_extreme_curve",
    "T5_support_selection",
    "BARRIER_half",
    "BOLLOBAS",
    "ZIRAKZADEH",
    "CONJECTURE",
    "CROFTON_DOMINANCE",
    "CHAIN_BOUND",
)

CSV_COLUMNS = ("theorem_id", "seed", "n", "lhs", "rhs", "slack", "pass")


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one inequality check.

    ``relation`` is ``">="`` (pass when ``slack >= -tolerance_used``) or
    ``"<"`` (pass when ``slack > tolerance_used``); in both cases slack is
    oriented so that positive means the inequality holds with room to spare.
    """

    theorem_id: str
    lhs: float
    rhs: float
    slack: float
    passed: bool
    shape_provenance: str = ""
    tolerance_used: float = 0.0
    relation: str = ">="
    seed: int | None = None
    n: int | None = None
    details: dict = field(default_factory=dict, compare=False)

    @classmethod
    def at_least(cls, theorem_id, lhs, rhs, tol, **kw) -> "CheckReport":
        slack = float(lhs) - float(rhs)
        return cls(theorem_id, float(lhs), float(rhs), slack, slack >= -tol, tolerance_used=tol, relation=">=", **kw)

    @classmethod
    def strictly_less(cls, theorem_id, lhs, rhs, tol, **kw) -> "CheckReport":
        slack = float(rhs) - float(lhs)
        return cls(theorem_id, float(lhs), float(rhs), slack, slack > tol, tolerance_used=tol, relation="<", **kw)

    def row(self) -> tuple:
        return (
            self.theorem_id,
            "" if self.seed is None else str(self.seed),
            "" if self.n is None else str(self.n),
            repr(self.lhs),
            repr(self.rhs),
            repr(self.slack),
            "1" if self.passed else "0",
        )


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow(r.row())
    return buf.getvalue()


def write_atomic(path, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file and rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
