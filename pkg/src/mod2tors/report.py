"""Per-curve summaries and batch scans over curve files."""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .curvefile import CurveRecord, Diagnostic
from .curves import LongModel, Model, as_short
from .galois2 import discriminant_is_square, mod2_image, sqrt_discriminant, two_torsion_order
from .torsion import MAZUR_SHAPES, torsion_subgroup


def _s(v) -> str:
    return str(v)


def summarize(E: Model) -> dict:
    """JSON-ready description of a curve; every number is a decimal string."""
    S = as_short(E)
    ainvs = E.ainvs if isinstance(E, LongModel) else (0, 0, 0, E.A, E.B)
    root = sqrt_discriminant(E)
    T = torsion_subgroup(S)
    return {
        "model": {"a": [_s(a) for a in ainvs]},
        "short": [_s(S.A), _s(S.B)],
        "discriminant": _s(E.discriminant),
        "discriminant_is_square": root is not None,
        "sqrt_discriminant": None if root is None else _s(root),
        "two_torsion_order": two_torsion_order(S),
        "mod2_image": mod2_image(S).value,
        "torsion": T.shape,
        "witnesses": [[_s(P.x), _s(P.y)] for P in T.generators],
    }


def classify_triple(E: Model) -> tuple[str, bool, str]:
    """(torsion shape, is the discriminant a square, mod-2 image)."""
    S = as_short(E)
    return torsion_subgroup(S).shape, discriminant_is_square(S), mod2_image(S).value


def _scan_one(rec: CurveRecord) -> tuple[int, tuple[str, bool] | None, str | None]:
    try:
        S = rec.short
        return rec.source_line, (torsion_subgroup(S).shape, discriminant_is_square(S)), None
    except Exception as exc:  # one bad record must not stop the batch
        return rec.source_line, None, f"{rec.name}: {type(exc).__name__}: {exc}"


def _shape_key(key: tuple[str, bool]) -> tuple[int, bool]:
    return MAZUR_SHAPES.index(key[0]), key[1]


@dataclass
class ScanReport:
    counts: dict[tuple[str, bool], int]
    total: int
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def proportions(self) -> dict[tuple[str, bool], Fraction]:
        return {k: Fraction(v, self.total) for k, v in self.counts.items()}

    def to_dict(self) -> dict:
        rows = []
        props = self.proportions
        for key in sorted(self.counts, key=_shape_key):
            rows.append({
                "torsion": key[0],
                "discriminant_is_square": key[1],
                "count": self.counts[key],
                "proportion": str(props[key]),
            })  # fmt: skip
        return {
            "total": self.total,
            "counts": rows,
            "diagnostics": [{"line": d.line, "message": d.message} for d in self.diagnostics],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"{'torsion':<8} {'square':<7} {'count':>7}  proportion"]
        for row in self.to_dict()["counts"]:
            sq = "yes" if row["discriminant_is_square"] else "no"
            lines.append(f"{row['torsion']:<8} {sq:<7} {row['count']:>7}  {row['proportion']}")
        lines.append(f"total {self.total}")
        lines += [f"line {d.line}: {d.message}" for d in self.diagnostics]
        return "\n".join(lines) + "\n"


def run_scan(
    records: Iterable[CurveRecord],
    workers: int = 1,
    diagnostics: Iterable[Diagnostic] = (),
) -> ScanReport:
    """Tally (torsion shape, square discriminant) over the records.

    Per-record failures are appended to the diagnostics instead of aborting.
    Results are merged in input order, so the report does not depend on how
    the work was scheduled.
    """
    records = list(records)
    if not records:
        raise ValueError("no records to scan")
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_scan_one, records, chunksize=8))
    else:
        results = [_scan_one(r) for r in records]

    counts: Counter[tuple[str, bool]] = Counter()
    diags = list(diagnostics)
    for line, key, err in results:
        if key is None:
            diags.append(Diagnostic(line, err))
        else:
            counts[key] += 1
    diags.sort(key=lambda d: d.line)
    return ScanReport(dict(counts), sum(counts.values()), diags)
