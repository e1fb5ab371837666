import io
import json
import subprocess
import sys

import pytest

from superyangian import ParitySeq
from superyangian.cli import Config, run
from superyangian.jsonio import lweight_from_json, qchar_from_json, system_from_json

GL11_Z = {"parity": "+-", "lweight": [{"num": ["-1"], "den": ["0"]}, {"num": [], "den": []}]}
# phi = (u+1)(u+2), psi = u(u-1); y = u + 1/2 divides 4u + 2
SOLUTION = {
    "parity": "+-",
    "zeta": [{"num": ["-2", "-1"], "den": ["0", "1"]}, {"num": [], "den": []}],
    "y": [["1/2", "1"]],
}
NON_SOLUTION = dict(SOLUTION, y=[["0", "1"]])


def call(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)
    return write


def test_reflect_example(files):
    code, out, _ = call("reflect", "--lweight", files("z.json", GL11_Z), "--node", "1")
    assert code == 0
    assert json.loads(out) == {"parity": "-+", "lweight": [{"num": ["1"], "den": ["0"]}, {"num": [], "den": []}]}


def test_reflect_to(files):
    code, out, _ = call("reflect-to", "--lweight", files("z.json", GL11_Z), "--target", "-+")
    assert code == 0 and json.loads(out)["parity"] == "-+"
    z = {"parity": "-+", "lweight": GL11_Z["lweight"]}
    code, out, _ = call("reflect-to", "--lweight", files("y.json", z), "--target", "+-")
    assert code == 0 and json.loads(out)["parity"] == "+-"


def test_leading_minus_parity():
    assert call("skew-char", "--outer", "1", "--parity", "-+", "--count")[:2] == (0, "2\n")


def test_skew_count():
    assert call("skew-char", "--outer", "1", "--inner", "", "--parity", "+-", "--count")[:2] == (0, "2\n")


def test_skew_list_and_char():
    code, out, _ = call("skew-char", "--outer", "2,1", "--parity", "+-", "--list-tableaux")
    data = json.loads(out)
    assert code == 0 and len(data["tableaux"]) == 2 and len(data["cells"]) == 3
    code, out, _ = call("skew-char", "--outer", "2,1", "--parity", "+-")
    assert code == 0 and qchar_from_json(json.loads(out)).dim() == 2


def test_qchar_round_trip_through_cli(files):
    code, out, _ = call("qchar11", "--lweight", files("z.json", GL11_Z))
    assert code == 0
    q = qchar_from_json(json.loads(out))
    code, out2, _ = call("qchar-reflect", "--qchar", files("q.json", json.loads(out)))
    back = qchar_from_json(json.loads(out2))
    assert code == 0 and back.dim() == q.dim() == 2 and str(back.parity) == "-+"


def test_bae(files):
    code, out, _ = call("bae", "check", "--system", files("s.json", SOLUTION))
    data = json.loads(out)
    assert code == 0 and data["nodes"][0]["divisible"] is True
    code, out, _ = call("bae", "reproduce", "--system", files("s.json", SOLUTION), "--node", "1")
    assert code == 0
    assert json.loads(out) == system_to_dict(system_from_json(json.loads(out)))
    assert json.loads(out)["y"] == [["1"]]


def system_to_dict(sys_):
    from superyangian.jsonio import system_to_json
    return system_to_json(sys_)


def test_non_solution_exit_1(files):
    code, out, err = call("bae", "reproduce", "--system", files("s.json", NON_SOLUTION), "--node", "1")
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == "NotASolution"


def test_diffop_compare(files):
    after = {"parity": "-+", "zeta": [{"num": ["1"], "den": ["0"]}, {"num": [], "den": []}], "y": [["1"]]}
    before = {"parity": "+-", "zeta": GL11_Z["lweight"], "y": [["1"]]}
    code, out, _ = call("diffop", "compare", "--before", files("a.json", before), "--after", files("b.json", after))
    assert code == 0 and json.loads(out) == {"equal": True, "order": 8, "first_mismatch": None}


def test_finite_dim(files):
    code, out, _ = call("finite-dim", "--lweight", files("z.json", {"parity": "++", "lweight": GL11_Z["lweight"]}))
    assert code == 0 and json.loads(out) == {"parity": "++", "finite": True,
                                              "witness": [{"node": 1, "polys": [["0"]]}]}
    bad = {"parity": "++", "lweight": [{"num": ["1"], "den": ["0"]}, {"num": [], "den": []}]}
    code, out, _ = call("finite-dim", "--lweight", files("y.json", bad))
    assert json.loads(out)["finite"] is False


@pytest.mark.parametrize("argv, flag", [
    (["reflect", "--node", "1"], "--lweight"),
    (["reflect", "--lweight", "/nonexistent.json", "--node", "1"], "--lweight"),
    (["skew-char", "--outer", "x", "--parity", "+-"], "--outer"),
    ([], "subcommand"),
])
def test_usage_errors(argv, flag):
    code, _, err = call(*argv)
    assert code == 2 and flag in err


def test_node_out_of_range(files):
    code, _, err = call("reflect", "--lweight", files("z.json", GL11_Z), "--node", "5")
    assert code == 2 and "--node" in err


def test_domain_error_name(files):
    z = {"parity": "++", "lweight": GL11_Z["lweight"]}
    code, _, err = call("reflect", "--lweight", files("z.json", z), "--node", "1")
    assert code == 1 and json.loads(err)["error"] == "SameParity"


def test_malformed_json_is_usage_error(files):
    code, _, err = call("reflect", "--lweight", files("z.json", {"parity": "+-", "lweight": [{"num": [0.5]}]}),
                        "--node", "1")
    assert code == 2 and "--lweight" in err


def test_config_file_and_env(files, monkeypatch):
    before = {"parity": "+-", "zeta": GL11_Z["lweight"], "y": [["1"]]}
    a = files("a.json", before)
    cfg = files("cfg.json", {"truncation_order": 3})
    assert json.loads(call("diffop", "compare", "--before", a, "--after", a, "--config", cfg)[1])["order"] == 3
    # flags beat config
    assert json.loads(call("diffop", "compare", "--before", a, "--after", a, "--config", cfg,
                           "--order", "5")[1])["order"] == 5
    monkeypatch.setenv("SUPERYANGIAN_CONFIG", files("env.json", {"truncation_order": 2, "output_format": "json"}))
    assert json.loads(call("diffop", "compare", "--before", a, "--after", a)[1])["order"] == 2
    assert json.loads(call("diffop", "compare", "--before", a, "--after", a, "--config", cfg)[1])["order"] == 3


def test_bad_config(files):
    code, _, err = call("skew-char", "--outer", "1", "--parity", "+", "--config", files("c.json", {"colour": 1}))
    assert code == 2 and "colour" in err
    code, _, _ = call("skew-char", "--outer", "1", "--parity", "+", "--config",
                      files("d.json", {"tableau_cap": 0}))
    assert code == 2


def test_cap_overflow():
    code, _, err = call("skew-char", "--outer", "3,3", "--parity", "+-+", "--cap", "3")
    assert code == 1 and json.loads(err)["error"] == "TableauOverflow"


def test_table_format(files):
    code, out, _ = call("qchar11", "--lweight", files("z.json", GL11_Z), "--format", "table")
    assert code == 0 and not out.lstrip().startswith("{")
    code, out, _ = call("skew-char", "--outer", "2", "--parity", "+-", "--list-tableaux", "--format", "table")
    assert code == 0 and "(1,1)" in out


def test_deterministic(files):
    path = files("z.json", {"parity": "+-", "lweight": [{"num": ["3", "-1", "1/2"], "den": ["0", "2", "7"]},
                                                        {"num": [], "den": []}]})
    runs = {call("qchar11", "--lweight", path)[1] for _ in range(3)}
    assert len(runs) == 1
    assert lweight_from_json(json.loads(call("reflect", "--lweight", path, "--node", "1")[1])).parity == ParitySeq.parse("-+")


def test_console_script(files):
    path = files("z.json", GL11_Z)
    proc = subprocess.run([sys.executable, "-m", "superyangian.cli", "reflect", "--lweight", path, "--node", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["parity"] == "-+"


def test_config_defaults():
    assert Config() == Config(8, 10**6, "json")
