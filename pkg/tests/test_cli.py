import json

import pytest

from orbitduality.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    return code, out


def test_point_values(capsys):
    code, out = run(capsys, "sommers-dual", "B:<[5,1]>[5,4,4,3,1]")
    assert code == 0 and out == "C:[4,4,4,2,2]"
    code, out = run(capsys, "gamma", "B:<[5,1]>[5,4,4,3,1]")
    assert code == 0 and out == "(5/2,3/2,3/2,3/2,1/2,1/2,1/2,1/2)"
    code, out = run(capsys, "collapse", "--kind", "B", "[6,3,2]")
    assert code == 0 and out == "[5,3,3]"


def test_dual_routes_agree(capsys):
    outs = set()
    for route in ("general", "distinguished", "blocks"):
        _, out = run(capsys, "sommers-dual", "B:<[5,1]>[5,3,1]", "--route", route)
        outs.add(out)
    assert outs == {"C:[2,2,2,1,1]"}


def test_induce_saturate(capsys):
    code, out = run(capsys, "induce", "gl(4)+sp(8)", "[1,1,1,1];[2,2,2,1,1]")
    assert code == 0 and out == "C:[4,4,4,2,2] birational=False"
    code, out = run(capsys, "saturate", "gl(4)+so(9)", "[4];[5,3,1]")
    assert code == 0 and out == "B:[5,4,4,3,1]"


def test_json_mode_single_document(capsys):
    code, out = run(capsys, "--json", "sommers-dual", "B:<[5,1]>[5,3,1]")
    doc = json.loads(out)
    assert doc["dual"]["text"] == "C:[2,2,2,1,1]"
    assert doc["dual"]["partition"] == [2, 2, 2, 1, 1]
    assert doc["witness"]["gl"] == []
    code, out = run(capsys, "--json", "bvls-dual", "D:[2,2]I")
    doc = json.loads(out)
    assert doc["dual"]["decoration"] == "II"


def test_round_trip_output(capsys):
    _, out = run(capsys, "bvls-dual", "B:[3,1,1]")
    assert out == "C:[2,2]"
    _, back = run(capsys, "bvls-dual", out)
    assert back == "B:[3,1,1]"


def test_group_and_markable(capsys):
    code, out = run(capsys, "--json", "group", "C:[4,2,2]")
    doc = json.loads(out)
    assert doc["a_rank"] == 2 and doc["a_ad_rank"] == 1
    code, out = run(capsys, "--json", "markable", "C:[6,4,2]")
    doc = json.loads(out)
    assert doc["markable"] == [4] and doc["abar_rank"] == 1


def test_table_verbs(capsys):
    code, out = run(capsys, "--json", "table", "g2")
    doc = json.loads(out)
    assert len(doc["rows"]) == 4
    code, out = run(capsys, "--json", "table", "gamma-e8")
    assert json.loads(out)["rows"] == []


def test_verify_exit_codes(capsys):
    code, out = run(capsys, "verify", "kernel")
    assert code == 0 and out.startswith("PASS")


def test_error_paths(capsys):
    code = main(["collapse", "--kind", "B", "[6,4]"])
    assert code == 1
    with pytest.raises(SystemExit) as err:
        main(["collapse"])
    assert err.value.code == 2
