import json
import subprocess
import sys
from fractions import Fraction

import pytest

from mod2tors.cli import main
from mod2tors.curvefile import (
    CurveFileError,
    UnreadableCurveFileError,
    fixture_path,
    load_fixture,
    parse_curve_file,
    parse_curve_text,
)
from mod2tors.report import run_scan
from mod2tors.verify import table_violation, verify_suites

# --- parsing ------------------------------------------------------------------


def test_parse_formats():
    cf = parse_curve_text("# comment\n\n11a1 0 -1 1 -10 -20 extra tokens\n0 0 0 -1 0  # inline\n")
    assert [r.label for r in cf] == ["11a1", None]
    assert cf.records[0].a_invariants == (0, -1, 1, -10, -20)
    assert cf.records[0].extra == ("extra", "tokens")
    assert cf.records[1].short.A == -1 and cf.records[1].source_line == 4
    assert cf.diagnostics == []


def test_parse_collects_diagnostics():
    cf = parse_curve_text("good 0 0 0 -1 0\nbad 1 2 x 4 5\nshort 1 2 3\n0 0 0 0 0\n")
    assert len(cf) == 1
    assert [d.line for d in cf.diagnostics] == [2, 3, 4]
    assert "singular" in cf.diagnostics[2].message


def test_singular_labelled_line_is_a_diagnostic():
    # the nodal cubic y^2 + xy = x^3 - x^2 parses syntactically but is not a curve
    cf = parse_curve_text("11a3 1 -1 0 0 0\n")
    assert cf.records == [] and cf.diagnostics[0].line == 1


def test_parse_file_errors(tmp_path):
    with pytest.raises(UnreadableCurveFileError):
        parse_curve_file(tmp_path / "missing.curves")
    empty = tmp_path / "empty.curves"
    empty.write_text("# nothing\n")
    with pytest.raises(CurveFileError, match="no valid"):
        parse_curve_file(empty)


def test_parser_roundtrip():
    for name in ("examples.curves", "table_rows.curves"):
        recs = load_fixture(name).records
        again = parse_curve_text("\n".join(r.to_line() for r in recs)).records
        assert [(r.label, r.a_invariants, r.extra) for r in again] == [
            (r.label, r.a_invariants, r.extra) for r in recs
        ]


# --- scanning -------------------------------------------------------------------


def test_scan_examples():
    rep = run_scan(load_fixture("examples.curves"))
    assert rep.counts == {("C2xC2", True): 1, ("C6", False): 1, ("C1", False): 1, ("C1", True): 1}
    assert rep.total == 4
    assert sum(rep.proportions.values()) == 1
    assert set(rep.proportions.values()) == {Fraction(1, 4)}


def test_scan_empty_raises():
    with pytest.raises(ValueError):
        run_scan([])


def test_scan_malformed_plus_good(tmp_path):
    f = tmp_path / "mixed.curves"
    f.write_text("nonsense here\nok 0 0 0 0 1\n")
    parsed = parse_curve_file(f)
    rep = run_scan(parsed.records, diagnostics=parsed.diagnostics)
    assert rep.total == 1 and len(rep.diagnostics) == 1


def test_scan_is_deterministic():
    recs = load_fixture("table_rows.curves").records
    a = run_scan(recs).to_json()
    b = run_scan(list(reversed(recs)), workers=2).to_json()
    assert a == b
    assert sum(row["count"] for row in json.loads(a)["counts"]) == len(recs)


# --- table rule and verification ---------------------------------------------------


@pytest.mark.parametrize(
    "triple, ok",
    [
        (("C2xC4", True, "Id"), True),
        (("C2xC4", False, "C2"), False),
        (("C6", False, "C2"), True),
        (("C7", False, "S3"), True),
        (("C7", False, "C2"), False),
        (("C1", True, "C3"), True),
        (("C1", False, "C3"), False),
        (("C3", False, "S3"), True),
        (("C11", False, "S3"), False),
    ],
)
def test_table_violation(triple, ok):
    assert (table_violation(*triple) is None) == ok


def test_verify_quotient_and_table():
    assert verify_suites("quotient").passed
    rep = verify_suites("table")
    assert rep.passed, rep.to_text()
    assert any(r.name.endswith("C5_row") for r in rep.results)


def test_verify_rejects_unknown_suite():
    with pytest.raises(ValueError):
        verify_suites("nope")


def _corrupt_square_flag(tmp_path):
    text = fixture_path("table_rows.curves").read_text()
    bad = text.replace("C5 no S3", "C5 yes S3")
    assert bad != text
    f = tmp_path / "corrupt.curves"
    f.write_text(bad)
    return f


def test_verify_table_flags_corrupted_fixture(tmp_path):
    f = _corrupt_square_flag(tmp_path)
    rep = verify_suites("table", inputs=[f])
    assert not rep.passed
    assert [r.name for r in rep.failures] == ["corrupt.curves:C5_row"]


# --- command line -----------------------------------------------------------------------


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_json_schema(capsys):
    code, out, _ = run(["classify", "--short=-81,243", "--json"], capsys)
    assert code == 0
    d = json.loads(out)
    assert d["model"]["a"] == ["0", "0", "0", "-81", "243"]
    assert d["discriminant"] == "8503056"
    assert d["discriminant_is_square"] is True and d["sqrt_discriminant"] == "2916"
    assert d["two_torsion_order"] == 1 and d["mod2_image"] == "C3"
    assert d["torsion"] == "C1" and d["witnesses"] == []


def test_torsion_long_model(capsys):
    code, out, _ = run(["torsion", "--long", "0,-1,-1,0,0", "--json"], capsys)
    d = json.loads(out)
    assert code == 0 and d["torsion"] == "C5" and d["mod2_image"] == "S3"
    assert len(d["witnesses"]) == 1


def test_big_integers_are_strings(capsys):
    code, out, _ = run(["family", "e9", "--alpha", "7/3", "--json"], capsys)
    d = json.loads(out)
    assert code == 0 and d["torsion"] == "C9"
    assert isinstance(d["discriminant"], str) and abs(int(d["discriminant"])) > 2**64


@pytest.mark.parametrize(
    "argv, code",
    [
        (["classify", "--short", "0,0"], 2),
        (["classify"], 1),
        (["classify", "--short", "1,x"], 1),
        (["bogus"], 1),
        (["family", "e1", "--params", "1,0,1,0"], 2),
        (["family", "e5", "--alpha", "0"], 2),
        (["family", "e5"], 1),
        (["fermat", "decompose", "--xyz", "3,0,1"], 2),
        (["scan", "--input", "/nonexistent/file"], 1),
        (["family", "simplest", "--m", "0"], 0),
        (["family", "ealt", "--params", "1,0,0,1"], 0),
        (["family", "e3", "--alpha", "0", "--beta", "1"], 0),
        (["family", "e2", "--params", "1,1,1,1"], 0),
    ],
)
def test_exit_codes(argv, code, capsys):
    assert run(argv, capsys)[0] == code


def test_fermat_commands(capsys):
    code, out, _ = run(["fermat", "solve", "--max-z", "3", "--json"], capsys)
    assert code == 0 and len(json.loads(out)["solutions"]) == 13
    code, out, _ = run(["fermat", "param", "--params", "1,1,1,0"], capsys)
    assert out.split() == ["0", "6", "3"]
    code, out, _ = run(["fermat", "decompose", "--xyz=-9,3,3", "--json"], capsys)
    assert code == 0 and set(json.loads(out)) == {"a", "b", "c", "d"}


def test_dsearch_command(capsys):
    code, out, _ = run(["dsearch", "--n", "9", "--height", "30", "--json"], capsys)
    assert json.loads(out)["points"] == [["0", "0"], ["1", "0"]]


def test_scan_command(capsys):
    path = str(fixture_path("examples.curves"))
    code, out1, _ = run(["scan", "--input", path, "--json"], capsys)
    code2, out2, _ = run(["scan", "--input", path, "--json", "--workers", "2"], capsys)
    assert code == code2 == 0 and out1 == out2
    assert json.loads(out1)["total"] == 4


def test_verify_command(tmp_path, capsys):
    assert run(["verify", "--suite", "quotient"], capsys)[0] == 0
    f = _corrupt_square_flag(tmp_path)
    code, out, _ = run(["verify", "--suite", "table", "--input", str(f)], capsys)
    assert code == 3 and "corrupt.curves:C5_row" in out


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "mod2tors", "classify", "--short=-1,0"], capture_output=True, text=True
    )
    assert res.returncode == 0 and "Id" in res.stdout
