import json

import pytest

from vahlen import QuadraticSpace, parse_element, parse_matrix
from vahlen.cli import main

from support import GF3


@pytest.fixture
def cfg(tmp_path):
    def write(data, name="cfg.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return write


@pytest.fixture
def gf3_rank1(cfg):
    return cfg({"ring": {"kind": "prime-field-p", "p": 3}, "rank": 1, "q_diag": ["1"]})


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_check_identity_member(capsys):
    code, out, _ = run(capsys, "check", "--definition", "3", "--kind", "ordinary", "1; 0; 0; 1")
    assert code == 0 and "member" in out.splitlines()[0] and "not" not in out.splitlines()[0]


def test_check_non_member_exits_1(capsys, gf3_rank1):
    code, d = run_json(capsys, "--config", gf3_rank1, "check", "1; 1; 1; 1")
    assert code == 1 and d["ok"] is False and d["result"]["member"] is False
    assert any(not c["passed"] for c in d["result"]["clauses"])


def test_pseudo_det_identity(capsys):
    code, out, _ = run(capsys, "pseudo-det", "1; 0; 0; 1")
    assert code == 0 and out.strip() == "1"


def test_verify_vahlen_equiv(capsys, gf3_rank1):
    code, d = run_json(capsys, "verify", "--theorem", "vahlen-equiv", "--config", gf3_rank1)
    assert code == 0 and d["result"]["passed"] is True
    assert d["result"]["counts"]["definition 3"] == 96


def test_verify_refusal_exits_1(capsys, cfg):
    path = cfg({"ring": {"kind": "prime-field-p", "p": 3}, "q_diag": ["1", "2"]})
    code, d = run_json(capsys, "--config", path, "verify", "--theorem", "vahlen-equiv")
    assert code == 1 and d["result"]["refused"]


def test_mul_and_round_trip(capsys, gf3_rank1):
    space = QuadraticSpace(GF3, [1])
    code, out, _ = run(capsys, "--config", gf3_rank1, "mul", "1 + e1", "2 + e1")
    assert code == 0
    assert parse_element(space, out.strip()) == parse_element(space, "1 + e1") * parse_element(space, "2 + e1")
    code, out, _ = run(capsys, "--config", gf3_rank1, "mul", "1; e1; 0; 1", "1; 0; e1; 1")
    assert code == 0
    g = parse_matrix(space, out.strip())
    assert g == parse_matrix(space, "1; e1; 0; 1") * parse_matrix(space, "1; 0; e1; 1")


def test_invert(capsys, gf3_rank1):
    code, out, _ = run(capsys, "--config", gf3_rank1, "invert", "e1")
    assert code == 0 and out.strip() == "1*e1"
    code, out, _ = run(capsys, "--config", gf3_rank1, "invert", "1 + e1")
    assert code == 1


def test_map_phi_and_back(capsys, gf3_rank1):
    code, out, _ = run(capsys, "--config", gf3_rank1, "map", "--which", "phi", "e1")
    assert code == 0
    assert parse_matrix(QuadraticSpace(GF3, [1]), out.strip()) == parse_matrix(QuadraticSpace(GF3, [1]), "0; 1; 0; 0")
    code, out, _ = run(capsys, "--config", gf3_rank1, "map", "--which", "phi-inv", out.strip())
    assert code == 0 and out.strip() == "1*e1"


def test_map_theta_rejects_odd(capsys, gf3_rank1):
    code, d = run_json(capsys, "--config", gf3_rank1, "map", "--which", "theta", "e1")
    assert code == 2 and d["error"]["type"] == "domain"


def test_enumerate(capsys, gf3_rank1):
    code, d = run_json(capsys, "--config", gf3_rank1, "enumerate", "--group", "gv")
    assert code == 0 and d["result"]["count"] == 96
    code, d = run_json(capsys, "--config", gf3_rank1, "enumerate", "--group", "sv", "--list")
    assert d["result"]["count"] == len(d["result"]["members"]) == 48
    space = QuadraticSpace(GF3, [1])
    assert all(str(parse_matrix(space, m)) == m for m in d["result"]["members"])


def test_enumerate_split_elements(capsys, cfg):
    path = cfg({"ring": {"kind": "prime-field-p", "p": 3}, "q_diag": ["1"], "splitting": {"kind": "ordinary"}})
    code, d = run_json(capsys, "--config", path, "enumerate", "--group", "pin")
    assert code == 0 and d["result"]["count"] == 48
    assert d["config"]["splitting"] == {"kind": "ordinary"}


def test_parse_error_position(capsys, gf3_rank1):
    code, out, err = run(capsys, "--config", gf3_rank1, "mul", "e1 + ")
    assert code == 2 and "position 5" in err and "^" in err
    code, d = run_json(capsys, "--config", gf3_rank1, "mul", "e1 + ")
    assert code == 2 and d["error"]["position"] == 5


def test_usage_and_config_errors(capsys, cfg):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "check")[0] == 2
    assert run(capsys, "--config", "/nonexistent.json", "pseudo-det", "1; 0; 0; 1")[0] == 2
    bad = cfg({"ring": {"kind": "octonions"}})
    assert run(capsys, "--config", bad, "pseudo-det", "1; 0; 0; 1")[0] == 2
    code, out, _ = run(capsys, "--json", "frobnicate")
    assert code == 2 and json.loads(out)["error"]["type"] == "usage"


def test_json_envelope_is_stable(capsys, gf3_rank1):
    invocations = [
        ("mul", "e1", "e1"),
        ("invert", "e1"),
        ("pseudo-det", "1; 0; 0; 1"),
        ("check", "1; 0; 0; 1"),
        ("map", "--which", "phi", "e1"),
        ("enumerate", "--group", "nc"),
        ("verify", "--theorem", "vahlen-iso"),
    ]
    for argv in invocations:
        _, d = run_json(capsys, "--config", gf3_rank1, *argv)
        assert set(d) == {"command", "ok", "config", "result"}, argv
        assert d["command"] == argv[0]
        assert d["config"]["ring"] == {"kind": "prime-field-p", "p": 3}


def test_options_after_command(capsys, gf3_rank1):
    code, out, _ = run(capsys, "pseudo-det", "--json", "--config", gf3_rank1, "2*e1; 0; 0; e1")
    assert code == 0 and json.loads(out)["result"]["value"] == "2"


def test_laurent_smoke_cli(capsys):
    code, d = run_json(capsys, "verify", "--theorem", "laurent-smoke", "--samples", "5")
    assert code == 0 and d["result"]["counts"]["samples"] == 5


def test_threads_flag(capsys, gf3_rank1):
    code, d = run_json(capsys, "--config", gf3_rank1, "verify", "--theorem", "vahlen-iso", "--threads", "2")
    assert code == 0 and d["result"]["counts"]["GV(N)"] == 96
