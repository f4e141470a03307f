"""Verification harness: the torsion / square-discriminant / image table,
the family invariants, the Fermat parametrization and the quotient map.

Every check becomes a named :class:`CaseResult`; exceptions are caught and
reported as failures so one broken case never hides the rest.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .curvefile import CurveRecord, load_fixture, parse_curve_file
from .curves import Model, SingularCurveError, is_isomorphic
from .families import (
    d_search,
    delta3,
    delta_n,
    e3,
    e3_point,
    e_alt,
    e_alt_params,
    e_n,
    e_n_with_point,
    e_sq3,
    e_sq3_point,
    quotient_map_checks,
    simplest_cubic,
)
from .fermat import decompose, enumerate_solutions, param_forward
from .report import classify_triple
from .torsion import MAZUR_SHAPES

SUITES = ("table", "families", "fermat", "quotient")
FIXTURES = ("examples.curves", "table_rows.curves")

# shape -> (required squareness or None if either, allowed images)
TABLE: dict[str, tuple[bool | None, frozenset[str]]] = {
    "C1": (None, frozenset({"C3", "S3"})),
    "C3": (None, frozenset({"C3", "S3"})),
    **{s: (False, frozenset({"S3"})) for s in ("C5", "C7", "C9")},
    **{s: (False, frozenset({"C2"})) for s in ("C2", "C4", "C6", "C8", "C10", "C12")},
    **{s: (True, frozenset({"Id"})) for s in ("C2xC2", "C2xC4", "C2xC6", "C2xC8")},
}

# d_search results expected inside any height window
D_POINTS = {5: [(0, 0)], 7: [(0, 0), (1, 0)], 9: [(0, 0), (1, 0)]}


def table_violation(shape: str, square: bool, image: str) -> str | None:
    """Why the triple contradicts the table, or None when it fits."""
    if shape not in TABLE:
        return f"{shape} is not a Mazur group"
    want_square, images = TABLE[shape]
    if want_square is not None and square != want_square:
        return f"{shape} needs square={want_square}, got {square}"
    if image not in images:
        return f"{shape} allows image {sorted(images)}, got {image}"
    if want_square is None and (image == "C3") != square:
        return f"{shape}: image C3 must coincide with a square discriminant"
    return None


@dataclass(frozen=True)
class CaseResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.suite}:{self.name}{tail}"


@dataclass
class VerifyReport:
    results: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CaseResult]:
        return [r for r in self.results if not r.passed]

    def to_text(self, verbose: bool = False) -> str:
        shown = self.results if verbose else self.failures
        lines = [r.line() for r in shown]
        lines.append(f"{len(self.results) - len(self.failures)}/{len(self.results)} checks passed")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "results": [
                {"suite": r.suite, "name": r.name, "passed": r.passed, "detail": r.detail}
                for r in self.results
            ],
        }


def _case(suite: str, name: str, check: Callable[[], str | None]) -> CaseResult:
    """Run one check: a returned string (or an exception) is a failure."""
    try:
        problem = check()
    except Exception as exc:
        problem = f"{type(exc).__name__}: {exc}"
    return CaseResult(suite, name, problem is None, problem or "")


# --- table -----------------------------------------------------------------


def _check_triple(E: Model, expect_shape: str | None = None) -> str | None:
    shape, square, image = classify_triple(E)
    bad = table_violation(shape, square, image)
    if bad:
        return bad
    if expect_shape is not None and shape != expect_shape:
        return f"expected torsion {expect_shape}, got {shape}"
    return None


def _check_record(rec: CurveRecord) -> str | None:
    shape, square, image = classify_triple(rec.model)
    bad = table_violation(shape, square, image)
    if bad:
        return bad
    if len(rec.extra) >= 3:
        e_shape, e_square, e_image = rec.extra[:3]
        got = (shape, "yes" if square else "no", image)
        if got != (e_shape, e_square, e_image):
            return f"annotated {e_shape} {e_square} {e_image}, computed {' '.join(got)}"
    return None


def _generated_curves() -> Iterator[tuple[str, Callable[[], Model], str | None]]:
    """(name, constructor, expected torsion shape or None) for family instances."""
    for n in (5, 7, 9):
        for a in (2, 3, -2, Fraction(1, 2), Fraction(-1, 3), Fraction(2, 3), Fraction(5, 2)):
            yield f"E{n}({a})", (lambda n=n, a=a: e_n(n, a)), f"C{n}"
    for al, be in itertools.product(range(-2, 3), repeat=2):
        if delta3(al, be) != 0:
            yield f"E3({al},{be})", (lambda al=al, be=be: e3(al, be)), None
    for p in itertools.product(range(-1, 2), repeat=4):
        for variant in (1, 2):
            yield f"E{variant}{p}", (lambda v=variant, p=p: e_sq3(v, p)), None
        yield f"Ealt{p}", (lambda p=p: e_alt(p)), None
    for m in range(-6, 7):
        yield f"simplest({m})", (lambda m=m: simplest_cubic(m)), None


def suite_table(inputs: Iterable[str | Path] = ()) -> list[CaseResult]:
    out = []
    bundled = []
    for name in FIXTURES:
        for rec in load_fixture(name):
            bundled.append(rec)
            out.append(_case("table", f"{name}:{rec.name}", lambda rec=rec: _check_record(rec)))
    for path in inputs:
        for rec in parse_curve_file(path):
            out.append(_case("table", f"{Path(path).name}:{rec.name}", lambda rec=rec: _check_record(rec)))

    def coverage() -> str | None:
        seen = {classify_triple(r.model)[0] for r in bundled}
        missing = [s for s in MAZUR_SHAPES if s not in seen]
        return f"no fixture for {missing}" if missing else None

    out.append(_case("table", "fixture-coverage", coverage))

    for name, make, shape in _generated_curves():

        def check(make=make, shape=shape) -> str | None:
            try:
                E = make()
            except SingularCurveError:
                return None  # singular instances are skipped, not counted
            return _check_triple(E, shape)

        out.append(_case("table", name, check))
    return out


# --- families --------------------------------------------------------------


def _has_order(E, P, n: int) -> str | None:
    k = E.order(P, n)
    return None if k == n else f"{P} has order {k}, expected {n}"


def suite_families(height: int = 100, seed: int = 0) -> list[CaseResult]:
    rng = random.Random(seed)
    out = []

    def rand_q() -> Fraction:
        while True:
            a = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
            if all(delta_n(n, a) for n in (5, 7, 9)):
                return a

    for n in (5, 7, 9):
        for _ in range(10):
            a = rand_q()

            def check(n=n, a=a) -> str | None:
                E, P = e_n_with_point(n, a)  # asserts the closed-form coefficients and discriminant
                return _has_order(E, P, n)

            out.append(_case("families", f"E{n}({a})", check))

    for al, be in itertools.product(range(-3, 4), repeat=2):
        if delta3(al, be) == 0:
            continue

        def check3(al=al, be=be) -> str | None:
            E = e3(al, be)
            if E.discriminant != delta3(al, be):
                return "discriminant differs from the closed form"
            return _has_order(E, e3_point(al, be), 3)

        out.append(_case("families", f"E3({al},{be})", check3))

    grid = list(itertools.product(range(-2, 3), repeat=4))
    for p in grid:
        for variant in (1, 2):

            def check_sq(v=variant, p=p) -> str | None:
                try:
                    E = e_sq3(v, p)  # asserts the square discriminant formula
                except SingularCurveError:
                    return None
                return _has_order(E, e_sq3_point(v, p), 3)

            out.append(_case("families", f"E{variant}{p}", check_sq))

        def check_alt(p=p) -> str | None:
            try:
                E = e_alt(p)
            except SingularCurveError:
                return None
            shape = classify_triple(E)[0]
            if shape not in ("C1", "C3") and "x" not in shape:
                return f"torsion {shape} is neither trivial, C3 nor non-cyclic"
            q = e_alt_params(E)
            return None if is_isomorphic(E, e_alt(q)) else f"e_alt_params gave {q}"

        out.append(_case("families", f"Ealt{p}", check_alt))

    for m in range(-10, 11):

        def check_simplest(m=m) -> str | None:
            shape, square, image = classify_triple(simplest_cubic(m))
            if not square or image != "C3":
                return f"square={square}, image={image}"
            return None

        out.append(_case("families", f"simplest({m})", check_simplest))

    for n, expected in D_POINTS.items():

        def check_d(n=n, expected=expected) -> str | None:
            got = d_search(n, height)
            return None if got == expected else f"found {got}"

        out.append(_case("families", f"D{n}-height-{height}", check_d))
    return out


# --- fermat ----------------------------------------------------------------

SMALL_SOLUTIONS = {
    (0, 0, 0), (2, 0, 1), (-2, 0, 1), (0, 6, 3), (0, -6, 3),
    *((sx * 1, sy * 1, 1) for sx in (1, -1) for sy in (1, -1)),
    *((sx * 9, sy * 3, 3) for sx in (1, -1) for sy in (1, -1)),
}  # fmt: skip


def suite_fermat(max_z: int = 20) -> list[CaseResult]:
    out = []

    def forward() -> str | None:
        for p in itertools.product(range(-3, 4), repeat=4):
            param_forward(p)  # raises if the image is off the surface
        return None

    out.append(_case("fermat", "forward-grid", forward))

    def small() -> str | None:
        got = {tuple(s) for s in enumerate_solutions(3)}
        return None if got == SMALL_SOLUTIONS else f"got {sorted(got)}"

    out.append(_case("fermat", "enumerate-z<=3", small))

    for s in enumerate_solutions(max_z):

        def roundtrip(s=s) -> str | None:
            p = decompose(s)
            back = param_forward(p)
            return None if back == s else f"{p} maps to {back}"

        out.append(_case("fermat", f"roundtrip{tuple(s)}", roundtrip))
    return out


# --- quotient --------------------------------------------------------------


def suite_quotient() -> list[CaseResult]:
    checks = quotient_map_checks()
    return [CaseResult("quotient", k, v, "" if v else "identity fails") for k, v in checks.items()]


def verify_suites(
    suite: str = "all",
    *,
    inputs: Iterable[str | Path] = (),
    height: int = 100,
    max_z: int = 20,
) -> VerifyReport:
    names = SUITES if suite == "all" else (suite,)
    report = VerifyReport()
    for name in names:
        if name == "table":
            report.results += suite_table(inputs)
        elif name == "families":
            report.results += suite_families(height)
        elif name == "fermat":
            report.results += suite_fermat(max_z)
        elif name == "quotient":
            report.results += suite_quotient()
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {SUITES + ('all',)}")
    return report
