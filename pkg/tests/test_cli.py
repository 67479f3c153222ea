import csv
import io
import subprocess
import sys

import pytest

from hyperball.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_tables_compare_1p():
    code, out, _ = call("--no-banner", "tables", "--which", "1p", "--compare-paper")
    assert code == 0
    assert "0 failing cells" in out


def test_tables_compare_2c_adjudicates():
    code, out, _ = call("--no-banner", "tables", "--which", "2c", "--compare-paper")
    assert code == 0
    assert "matches the table value 1.26829" in out


def test_tables_compare_3p_fails_on_copied_row():
    code, out, _ = call("--no-banner", "tables", "--which", "3p", "--compare-paper")
    assert code == 1
    assert "{5,8,3} h: printed 0.67409" in out
    assert "4 failing cells" in out


def test_tables_compare_4p_reports_suspect_row():
    code, out, _ = call("--no-banner", "tables", "--which", "4p", "--compare-paper")
    assert code == 0
    assert "suspect row {8,3,10}" in out


def test_csv_format():
    code, out, _ = call("--no-banner", "tables", "--which", "2p", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["params", "h", "vol_orthoscheme", "vol_pieces", "density"]
    assert rows[1] == ["{7,3,7}", "1.23469", "0.38325", "0.31171", "0.81335"]
    assert out.splitlines()[1].startswith('"{7,3,7}"')


def test_markdown_format():
    code, out, _ = call("--no-banner", "tables", "--which", "1c", "--format", "md")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "| params | h | vol_orthoscheme | vol_pieces | density |"
    assert lines[-1].startswith("| {3,3,inf} | 0.65848 |")


def test_optimize_f1():
    code, out, _ = call("--no-banner", "optimize", "pack", "--family", "F1", "--max-param", "100")
    assert code == 0
    assert out.splitlines()[0] == "(3,3,7), 0.82251"


def test_catalog_validate():
    code, out, _ = call("--no-banner", "catalog", "validate")
    assert code == 0
    assert out.strip() == "73 series OK"


def test_catalog_list_and_show():
    code, out, _ = call("--no-banner", "catalog", "list", "--family", "F2")
    assert code == 0 and "2*2G" in out and "*233G" not in out
    code, out, _ = call("--no-banner", "catalog", "show", "--series", "2*2G")
    assert code == 0 and "(m3 r1 m3 r1)^v" in out
    code, _, err = call("--no-banner", "catalog", "show", "--series", "nope")
    assert code == 2 and "nope" in err


def test_orthoscheme_info_lob_heights_density():
    code, out, _ = call("--no-banner", "orthoscheme", "info", "--schlafli", "3,3,7")
    assert code == 0 and "volume 0.08856" in out and "A0:Outer" in out
    code, out, _ = call("--no-banner", "lob", "--x", "0.5235987755982988")
    assert code == 0 and out.strip() == "0.50747"
    code, out, _ = call("--no-banner", "heights", "--family", "F2", "--schlafli", "7,3,7")
    assert code == 0 and "h_p 1.23469" in out and "h_c 1.49903" in out and "d(F03,a3)" in out
    code, out, _ = call("--no-banner", "--precision", "7", "density", "cover", "--family", "F1", "--schlafli", "3,3,inf")
    assert code == 0 and "density 2.614" in out


def test_relators_check():
    code, out, _ = call("--no-banner", "relators", "check", "--schlafli", "3,3,7", "--with-polar")
    assert code == 0 and "14/14 relators pass" in out
    code, out, _ = call("--no-banner", "--tol", "1e-30", "relators", "check", "--schlafli", "3,3,7")
    assert code == 1 and "FAIL" in out


def test_usage_errors_exit_2():
    assert call("density", "pack", "--family", "F9", "--schlafli", "3,3,7")[0] == 2
    assert call("density", "pack", "--family", "F1", "--schlafli", "3,x,7")[0] == 2
    assert call("tables", "--which", "9z")[0] == 2
    assert call()[0] == 2


def test_computation_errors_exit_1():
    code, _, err = call("density", "pack", "--family", "F3", "--schlafli", "3,3,7")
    assert code == 1 and "FamilyMismatch" in err
    code, _, err = call("density", "cover", "--family", "F4", "--schlafli", "4,5,5")
    assert code == 1 and "UnsupportedFamily" in err
    code, _, err = call("orthoscheme", "info", "--schlafli", "3,3,5")
    assert code == 1 and "NotRealizable" in err


def test_banner_and_determinism():
    a = call("tables", "--which", "4p")[1]
    b = call("tables", "--which", "4p")[1]
    assert a == b
    assert a.startswith("# hyperball ")
    assert not call("--no-banner", "tables", "--which", "4p")[1].startswith("#")


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hyperball.cli", "--no-banner", "catalog", "validate"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "73 series OK"
