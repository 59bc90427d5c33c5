import json
import os
from pathlib import Path

import pytest

from greenblocks import cli, verify
from greenblocks.blocks import dump_block, gl_principal_block
from greenblocks.oracle import cache

GOLDEN = Path(__file__).parent / "golden"
UPDATE = os.environ.get("GREENBLOCKS_UPDATE_GOLDEN") == "1"

GOLDEN_CASES = {
    "block_gl3": ["block", "--gl", "3"],
    "block_sl4_d2": ["block", "--sl", "4", "--d", "2"],
    "restrict_gl2_torus_ggg": ["restrict", "--gl", "2", "--levi", "1,1", "--ggg", "2"],
    "restrict_gl6_42_subregular": ["restrict", "--gl", "6", "--levi", "4,2", "--subregular"],
}


@pytest.fixture(autouse=True)
def _restore_cache():
    yield
    cache.set_cache_enabled(True)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_reports(name, capsys):
    code, out, _ = run(capsys, *GOLDEN_CASES[name])
    assert code == 0
    path = GOLDEN / f"{name}.json"
    if UPDATE:
        path.write_text(out)
    assert json.loads(out) == json.loads(path.read_text())


def test_block_gl3_shape(capsys):
    _, out, _ = run(capsys, "block", "--gl", "3")
    d = json.loads(out)
    assert d["schema"] == "greenblocks.report/1" and d["meta"]["pairs"] == 3
    p = d["matrices"]["P~"]
    assert p["rows"] == ["1+1+1", "2+1", "3"] and len(p["cells"]) == 3
    assert all(len(row) == 3 for row in p["cells"])
    assert set(d["matrices"]) >= {"Omega", "Xi_numerator", "P~", "Lambda~", "Q~"}


def test_block_sl4_d2_is_two_by_two(capsys):
    _, out, _ = run(capsys, "block", "--sl", "4", "--d", "2")
    d = json.loads(out)
    assert d["meta"]["pairs"] == 2 and d["meta"]["W"] == "A1"


def test_restrict_regular_coefficient_is_one(capsys):
    _, out, _ = run(capsys, "restrict", "--gl", "2", "--levi", "1,1", "--ggg", "2")
    d = json.loads(out)
    assert d["records"]["ggg"] == [{"pair": "2", "target": "1 x 1", "coefficient": [[0, 1]]}]
    assert d["meta"]["eps_I(M)"] == 1
    assert set(d["matrices"]) == {"ResMat", "R", "R*"}


def test_restrict_subregular_report(capsys):
    _, out, _ = run(capsys, "restrict", "--gl", "6", "--levi", "4,2", "--subregular")
    d = json.loads(out)
    rows = d["records"]["subregular"]
    assert rows and all(r["equal"] for r in rows)


def test_route_xi_agrees(capsys):
    _, a, _ = run(capsys, "block", "--gl", "4")
    _, b, _ = run(capsys, "block", "--gl", "4", "--route", "xi")
    da, db = json.loads(a), json.loads(b)
    for name in ("P~", "Lambda~", "Q~"):
        assert da["matrices"][name] == db["matrices"][name]


def test_block_ggg_orthogonality_records(capsys):
    code, out, _ = run(capsys, "block", "--sl", "4", "--d", "2", "--ggg")
    d = json.loads(out)
    assert code == 0
    assert d["records"]["orthogonality"] and all(r["equal"] for r in d["records"]["orthogonality"])


def test_load_round_trip(tmp_path, capsys):
    f = tmp_path / "gl3.block"
    f.write_text(dump_block(gl_principal_block(3)))
    _, built, _ = run(capsys, "block", "--gl", "3")
    code, loaded, _ = run(capsys, "block", "--load", str(f))
    assert code == 0
    assert json.loads(loaded)["matrices"] == json.loads(built)["matrices"]


@pytest.mark.parametrize("fmt", ["tsv", "table"])
def test_text_formats(fmt, capsys):
    code, out, _ = run(capsys, "block", "--gl", "2", "--format", fmt)
    assert code == 0
    assert "1+1" in out and "q^-1" in out


def test_verify_sln(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "sln", "--n", "8")
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_oracle_reports_cache(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--q", "3")
    d = json.loads(out)
    assert code == 0 and d["meta"]["cache"] not in ("", None, "off")


def test_verify_subregular_mentions_q_inverse(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "subregular")
    d = json.loads(out)
    assert code == 0 and any("q^-1" in n for n in d["records"]["criteria"][0]["notes"])


def test_no_cache_flag(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracle", "--q", "2", "--n", "2", "--no-cache")
    assert code == 0 and json.loads(out)["meta"]["cache"] == "off"


def test_verification_failure_exits_one(capsys, monkeypatch):
    def broken(res, **params):
        res.expect(False, "probe", "injected")

    monkeypatch.setitem(verify.CRITERIA, 2, ("broken", broken))
    code, out, _ = run(capsys, "verify", "--suite", "sln")
    d = json.loads(out)
    assert code == 1 and d["ok"] is False
    assert d["records"]["failures"][0]["locus"] == "probe"


@pytest.mark.parametrize("argv", [
    [],
    ["block"],
    ["block", "--gl", "3", "--sl", "4"],
    ["block", "--sl", "6", "--d", "4"],
    ["block", "--load", "/nonexistent/file.block"],
    ["block", "--gl", "3", "--format", "xml"],
    ["restrict", "--gl", "4", "--levi", "2,1"],
    ["restrict", "--gl", "3", "--levi", "2,1", "--ggg", "9"],
    ["verify", "--suite", "nope"],
    ["verify", "--suite", "oracle", "--q", "4"],
    ["frobnicate"],
])
def test_usage_errors_exit_two(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0 and "block" in out
