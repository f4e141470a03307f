"""Plain-text curve files.

One curve per line: an optional non-numeric label, then the five integer
a-invariants ``a1 a2 a3 a4 a6``.  Further tokens are kept as ``extra`` and
otherwise ignored; ``#`` starts a comment.  Lines that do not parse, or
that describe a singular curve, become diagnostics instead of records.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .curves import LongModel, ShortModel, SingularCurveError, as_short


class CurveFileError(ValueError):
    pass


class UnreadableCurveFileError(CurveFileError):
    pass


@dataclass(frozen=True)
class CurveRecord:
    label: str | None
    a_invariants: tuple[int, int, int, int, int]
    source_line: int
    extra: tuple[str, ...] = ()

    @property
    def model(self) -> LongModel:
        return LongModel(*self.a_invariants)

    @property
    def short(self) -> ShortModel:
        a1, a2, a3, a4, a6 = self.a_invariants
        if a1 == a2 == a3 == 0:
            return ShortModel(a4, a6)
        return as_short(self.model)

    @property
    def name(self) -> str:
        return self.label or f"line{self.source_line}"

    def to_line(self) -> str:
        parts = ([self.label] if self.label else []) + [str(a) for a in self.a_invariants]
        return " ".join(parts + list(self.extra))


@dataclass(frozen=True)
class Diagnostic:
    line: int
    message: str


@dataclass
class CurveFile:
    records: list[CurveRecord] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)

    def __iter__(self):
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True


def parse_curve_text(text: str) -> CurveFile:
    out = CurveFile()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        label = None
        if not _is_int(toks[0]):
            label, toks = toks[0], toks[1:]
        if len(toks) < 5 or not all(_is_int(t) for t in toks[:5]):
            out.diagnostics.append(Diagnostic(lineno, f"expected five integers: {raw.strip()!r}"))
            continue
        ainvs = tuple(int(t) for t in toks[:5])
        try:
            LongModel(*ainvs)
        except SingularCurveError:
            out.diagnostics.append(Diagnostic(lineno, f"singular curve {list(ainvs)}"))
            continue
        out.records.append(CurveRecord(label, ainvs, lineno, tuple(toks[5:])))
    return out


def parse_curve_file(path: str | Path) -> CurveFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UnreadableCurveFileError(f"cannot read {path}: {exc}") from exc
    parsed = parse_curve_text(text)
    if not parsed.records:
        raise CurveFileError(f"{path}: no valid curve records")
    return parsed


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("mod2tors") / "fixtures" / name))


def load_fixture(name: str) -> CurveFile:
    return parse_curve_file(fixture_path(name))
