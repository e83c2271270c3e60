import io

import pytest

from z4lattice import catalog
from z4lattice.cli import run
from z4lattice.enumerators import parse_enumerator, swe_from_code
from z4lattice.f2core import parse_f2_code, reed_muller
from z4lattice.theta import QExpansion
from z4lattice.z4core import parse_z4_code, same_code


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def ok(*argv):
    status, out, err = call(*argv)
    assert status == 0, err
    return out


@pytest.fixture
def o8_file(tmp_path):
    path = tmp_path / "o8.z4"
    path.write_text(catalog.octacode().to_text())
    return str(path)


def test_swe_octacode():
    out = ok("swe", "--catalog", "O8")
    p = parse_enumerator(out)
    assert p.mass == 256 and len(p.terms) == 6
    assert out.splitlines()[0] == "SWE 8 256"


def test_secrecy_gain_line():
    assert ok("secrecy-gain", "--catalog", "O8") == "gain=1.333333333 t*=0.8408964 tau*=1.0000000\n"


def test_deterministic():
    assert ok("swe", "--catalog", "C12") == ok("swe", "--catalog", "C12")
    assert ok("table1") == ok("table1")


def test_table1():
    lines = ok("table1").splitlines()
    assert len(lines) == 10
    body = {line.split()[0]: line for line in lines[1:]}
    assert body["[8,2^8,6]^sd"].split()[-3] == "1.333"
    assert body["[12,2^12,4]^fsd"].split()[-3] == "1.600"
    assert body["[16,2^16,8]^sd"].split()[-3] == "1.778"
    assert sum("external input required" in line for line in lines) == 6


def test_swe_file_pipeline(tmp_path, o8_file):
    swe = ok("swe", o8_file)
    path = tmp_path / "o8.swe"
    path.write_text(swe)
    assert ok("check-fsd", str(path)) == "formally_self_dual=true\n"
    assert ok("secrecy-gain", str(path)) == ok("secrecy-gain", o8_file)
    assert ok("theta", str(path), "--tau", "1").startswith("theta=1.45576")


def test_dual_round_trip(tmp_path, o8_file):
    out = ok("dual", o8_file)
    assert same_code(parse_z4_code(out), catalog.octacode())
    path = tmp_path / "d.z4"
    path.write_text(out)
    assert ok("swe", str(path)) == ok("swe", o8_file)


def test_check_fsd_false(tmp_path):
    path = tmp_path / "z.z4"
    path.write_text("Z4 3 0 1\n2 0 0\n")
    assert ok("check-fsd", str(path)) == "formally_self_dual=false\n"
    status, _, err = call("secrecy-gain", str(path))
    assert status == 1 and "formally self-dual" in err


def test_precision():
    assert ok("--precision", "4", "theta", "--catalog", "O8", "--tau", "1") == "theta=1.456\n"


def test_secrecy_function_point():
    assert ok("secrecy-function", "--catalog", "O8", "--tau", "1") == "xi=1.333333333\n"


def test_secrecy_function_csv():
    out = ok("secrecy-function", "--catalog", "O8", "--min-tau", "0.5", "--max-tau", "2", "--points", "3")
    lines = out.splitlines()
    assert lines[0] == "tau,xi"
    assert len(lines) == 4
    assert lines[2].startswith("1,1.33333333333333")


def test_secrecy_function_bad_grid():
    status, _, err = call("secrecy-function", "--catalog", "O8", "--min-tau", "2", "--max-tau", "1")
    assert status == 1


def test_lift_single_and_split(tmp_path):
    both = ok("catalog", "C12", "--binary")
    p = tmp_path / "pair.f2"
    p.write_text(both)
    from_one = ok("lift", str(p))
    c1, c2 = catalog.c12_pair()
    a, b = tmp_path / "a.f2", tmp_path / "b.f2"
    a.write_text(c1.to_text())
    b.write_text(c2.to_text())
    assert ok("lift", str(a), str(b)) == from_one
    assert same_code(parse_z4_code(from_one), catalog.get("C12").code())


def test_lift_closure_error(tmp_path):
    p = tmp_path / "bad.f2"
    p.write_text("F2 4 3\n1 1 0 0\n0 1 1 0\n0 0 1 1\nF2 4 3\n1 1 0 0\n0 1 1 0\n0 0 1 1\n")
    status, _, err = call("lift", str(p))
    assert status == 1
    assert "element-wise product" in err


def test_lift_wrong_block_count(tmp_path):
    p = tmp_path / "one.f2"
    p.write_text(reed_muller(1, 3).to_text())
    assert call("lift", str(p))[0] == 2


def test_rm():
    assert parse_f2_code(ok("rm", "1", "4")) == reed_muller(1, 4)
    code = parse_z4_code(ok("rm", "--unimodular", "4"))
    assert (code.k1, code.k2) == (5, 6)
    assert call("rm", "--unimodular", "3")[0] == 1
    assert call("rm", "1")[0] == 2


def test_qexp():
    q = QExpansion.from_text(ok("qexp", "--catalog", "O8", "--max-norm", "4"))
    assert q.count(2) == 240
    assert call("qexp", "--catalog", "RM16", "--max-norm", "2")[0] == 1


def test_catalog_listing():
    out = ok("catalog")
    assert out.splitlines()[0] == "name kind expected_gain"
    assert "RM32 binary-pair 7.11" in out
    assert parse_enumerator(ok("catalog", "C8")) == catalog.c8_swe()
    assert same_code(parse_z4_code(ok("catalog", "O8")), catalog.octacode())


def test_unknown_catalog_entry():
    status, _, err = call("swe", "--catalog", "E8")
    assert status == 1 and "available: O8" in err


def test_missing_file():
    assert call("swe", "/nonexistent/file.z4")[0] == 2


def test_missing_input():
    assert call("swe")[0] == 2


def test_parse_error(tmp_path):
    p = tmp_path / "bad.z4"
    p.write_text("Z4 2 1 0\n1 7\n")
    assert call("swe", str(p))[0] == 2
    p.write_text("hello\n")
    assert call("swe", str(p))[0] == 2


def test_budget(o8_file):
    status, _, err = call("--budget", "10", "swe", o8_file)
    assert status == 1 and "budget" in err


def test_threads(o8_file):
    assert ok("--threads", "3", "swe", "--catalog", "RM16") == ok("swe", "--catalog", "RM16")


def test_stdin(monkeypatch, o8_file):
    monkeypatch.setattr("sys.stdin", io.StringIO(catalog.octacode().to_text()))
    assert ok("swe", "-") == ok("swe", o8_file)


def test_swe_matches_library():
    assert parse_enumerator(ok("swe", "--catalog", "RM16")) == swe_from_code(catalog.get("RM16").code())
