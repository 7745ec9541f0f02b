import json
import pathlib

import jsonschema
import pytest

from mahonian.cli import main
from mahonian.verify import REPORT_SCHEMA

FIXTURE = pathlib.Path(__file__).with_name("fixtures") / "table3.tsv"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_stats(capsys):
    assert run(capsys, "stats", "211323", "--stat", "maj")[:2] == (0, "5\n")
    code, out, _ = run(capsys, "stats", "211323", "--json")
    data = json.loads(out)
    assert code == 0 and data["maj"] == 5 and data["majd(d=2)"] == 3


def test_map(capsys):
    assert run(capsys, "map", "foata", "211323")[:2] == (0, "312123\n")
    assert run(capsys, "map", "foata-d", "213123", "--d", "2")[1] == "312123\n"
    assert run(capsys, "map", "theta", "1112111222215622", "--i", "1")[1] == "2222111122215611\n"
    assert run(capsys, "map", "jump", "1213", "--x", "2")[1] == "3121\n"
    assert run(capsys, "map", "psi-m", "213123")[1] == "312123\n"
    assert run(capsys, "map", "csz-phi", "13213223")[1] == "12331223\n"
    code, out, _ = run(capsys, "map", "han-den", "124324", "--show-cycles")
    assert out == "123424\n(1|1)(2|2)(3|3)(24|42)(4|4)\n"


def test_table3_matches_fixture(capsys):
    code, out, _ = run(capsys, "table3")
    assert code == 0
    assert out == FIXTURE.read_text()
    assert len(out.strip().split("\n")) == 16


def test_enum(capsys):
    assert run(capsys, "enum", "words", "--multiset", "2,2", "--tail", "21")[1] == "1221\n2121\n2211\n"
    out = run(capsys, "enum", "partitions", "4", "--blocks", "2")[1]
    assert len(out.split()) == 7
    out = run(capsys, "enum", "partitions", "3", "--repr", "arcs")[1]
    assert out.count("\n") == 5


def test_dist_and_qstirling(capsys):
    out = run(capsys, "dist", "--stat", "inv", "--domain", "pm", "--multiset", "2,2,2")[1]
    assert out.strip() == "1 + 2*q + 3*q^2 + 3*q^3 + 3*q^4 + 2*q^5 + q^6"
    out = run(capsys, "dist", "--stat", "des", "--stat2", "maj", "--domain", "pm", "--multiset", "2,2")[1]
    assert out.strip() == "1 + t*q + t*q^2"
    out = run(capsys, "dist", "--stat", "z", "--domain", "smtau", "--multiset", "2,2", "--tail", "21")[1]
    assert out.strip() == "q^2 + q^3 + q^4"
    out = run(capsys, "dist", "--stat", "mak", "--domain", "pinm", "-n", "3", "-m", "2")[1]
    assert out.strip() == "2 + q"
    assert run(capsys, "qstirling", "--kind", "johnson", "-n", "3", "-m", "2")[1].strip() == "2 + q"


def test_verify_json_roundtrip(capsys):
    code, out, _ = run(capsys, "verify", "remarks", "--max-n", "4", "--json")
    assert code == 0
    for line in out.strip().split("\n"):
        rec = json.loads(line)
        jsonschema.validate(rec, REPORT_SCHEMA)
        assert rec["pass"] and "witness" in rec
    code, out, _ = run(capsys, "verify", "theorem1", "--max-n", "4")
    assert code == 0 and all(line.startswith("PASS") for line in out.strip().split("\n"))


@pytest.mark.parametrize("argv", [
    ["stats", "211323", "--stat", "STAT"],
    ["stats", "211323", "--stat", "nope"],
    ["stats", "21a3"],
    ["stats", "1,0"],
    ["map", "nope", "12"],
    ["map", "theta", "12"],
    ["map", "rawlings", "12"],
    ["map", "cyclic", "12"],
    ["stats", "12", "--stat", "majd"],
    ["stats"],
    ["bogus"],
    ["dist", "--stat", "inv", "--domain", "pm"],
    ["dist", "--stat", "inv", "--domain", "smtau", "--multiset", "2,2", "--tail", "123"],
    ["qstirling", "--kind", "johnson", "-n", "x", "-m", "1"],
    ["verify", "theorem9"],
    ["enum", "words", "--multiset", "2,-1"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2


def test_stat_explained(capsys):
    code, _, err = run(capsys, "stats", "12", "--stat", "STAT")
    assert code == 2 and "STAT" in err


def test_verify_failure_exits_1(capsys, monkeypatch):
    from mahonian import cli
    from mahonian.verify import VerificationReport
    monkeypatch.setattr(cli, "sweep", lambda claim, n: [VerificationReport("c", "d", False, {"w": "1"})])
    assert main(["verify", "theorem1"]) == 1
