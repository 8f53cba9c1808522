import io
import json
from fractions import Fraction

import pytest

from oracles import burnside_orbit_count
from projorbits import classify34 as c34
from projorbits.cli import dump_config, main, parse_config
from projorbits.errors import ParseError


def write(tmp_path, cols, field="rational", name="v.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"field": field, "n": len(cols[0]), "m": len(cols),
                                "columns": cols}, indent=1))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_phi7(tmp_path, capsys):
    path = write(tmp_path, [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["0", "1", "1"]])
    code, out, _ = run(capsys, "classify", path)
    assert code == 0
    assert out.splitlines()[0] == "phi[7;1], dim 7"
    assert "splitting: {({1},1), ({2,3,4},2)}" in out


def test_classify_o5_json_and_stdin(tmp_path, capsys, monkeypatch):
    path = write(tmp_path, [["1", "0", "0"], ["0", "1", "0"], ["1", "1", "0"], ["1", "2", "0"]])
    code, out, _ = run(capsys, "classify", path)
    assert out.splitlines()[:2] == ["O(5;[1:2]), dim 5", "p = 2"]
    code, out, _ = run(capsys, "classify", path, "--json")
    report = json.loads(out)
    assert report["label"] == "O(5;[1:2])" and report["p"] == "2" and report["stabilizer_dim"] == 4
    monkeypatch.setattr("sys.stdin", io.StringIO(open(path).read()))
    code, out, _ = run(capsys, "classify")
    assert code == 0 and out.startswith("O(5;[1:2])")


def test_classify_prime_field_and_plane(tmp_path, capsys):
    path = write(tmp_path, [[1, 0], [0, 1], [1, 1], [1, 3]], field={"kind": "prime", "q": 7})
    code, out, _ = run(capsys, "classify", path)
    assert code == 0 and out.startswith("O(5;[1:3]), dim 5")


def test_classify_errors(tmp_path, capsys):
    path = write(tmp_path, [["1", "0", "0"], ["0", "0", "0"], ["1", "1", "0"], ["1", "2", "0"]])
    code, _, err = run(capsys, "classify", path)
    assert code == 2 and "ParseError" in err and "v.json:11:" in err
    path = write(tmp_path, [["1", "0", "0"], ["0", "1", "0"], ["1", "1", "0"]], name="w.json")
    code, _, err = run(capsys, "classify", path)
    assert code == 2 and "UnsupportedShape" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{"field": "rational",\n "n": 3,\n "m": 4\n "columns": []}')
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 2 and "bad.json:4:" in err


def test_parse_config_rejects_floats_and_bad_fields():
    with pytest.raises(ParseError):
        parse_config('{"field": "rational", "n": 2, "m": 1, "columns": [[0.5, 1]]}')
    with pytest.raises(ParseError):
        parse_config('{"field": "real", "n": 2, "m": 1, "columns": [["1", "1"]]}')
    v = parse_config('{"field": {"prime": 5}, "n": 2, "m": 1, "columns": [[2, 4]]}')
    assert v.columns[0].coords == (1, 2)


def test_repr_examples(tmp_path, capsys):
    code, out, _ = run(capsys, "repr", "phi[8]")
    assert code == 0
    assert json.loads(out)["columns"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["1", "1", "1"]]
    code, out, _ = run(capsys, "repr", "O5@2")
    assert json.loads(out)["columns"] == [["1", "0", "0"], ["0", "1", "0"], ["1", "1", "0"], ["1", "2", "0"]]
    code, _, err = run(capsys, "repr", "O5@1")
    assert code == 2 and "BadParameter" in err
    code, _, err = run(capsys, "repr", "phi[3;1]")
    assert code == 2 and "BadLabel" in err


def test_repr_accepts_any_spelling_of_a_pair(capsys):
    code, out, _ = run(capsys, "repr", "phi[4;3,4]")
    assert code == 0 and c34.classify(parse_config(out)).name == "phi[4;1,2]"
    code, out, _ = run(capsys, "repr", "phi[6;4,3]", "--q", "5")
    assert c34.classify(parse_config(out)).name == "phi[6;3,4]"


def test_repr_classify_round_trip(tmp_path, capsys):
    grammar = [L.name for L in c34.discrete_labels()]
    params = ["2", "3", "-1", "1/2", "5/3", "-7", "4/9", "11", "-2/5", "13/2",
              "6", "-3", "7/4", "9", "-11/3", "2/7", "17", "-5", "8/3", "-13"]
    for label in grammar + [f"O5@{a}" for a in params]:
        out_path = tmp_path / "rep.json"
        assert main(["repr", label, "--out", str(out_path)]) == 0
        code, out, _ = run(capsys, "classify", str(out_path), "--json")
        report = json.loads(out)
        expected = label if not label.startswith("O5@") else \
            c34.o5(c34.ProjParam.affine(Fraction(label[3:]))).name
        assert code == 0 and report["label"] == expected


def test_census_command(capsys):
    code, out, _ = run(capsys, "census", "--q", "2")
    assert code == 0 and out.endswith("25 orbits\n")
    code, out, _ = run(capsys, "census", "--q", "3", "--method", "group")
    assert code == 0 and out.endswith("26 orbits\n")
    code, _, err = run(capsys, "census", "--q", "4")
    assert code == 2 and "BadField" in err
    code, _, err = run(capsys, "census", "--q", "7", "--method", "group")
    assert code == 2 and "TooLarge" in err
    code, out, _ = run(capsys, "census", "--q", "3", "--method", "group", "--nm", "2,4", "--json")
    assert code == 0 and json.loads(out)["orbit_count"] == burnside_orbit_count(3, 2, 4)


def test_hasse_command(tmp_path, capsys):
    code, out, _ = run(capsys, "hasse", "--p", "2")
    assert code == 0 and out.count("dim=") == 27
    code, out, _ = run(capsys, "hasse", "--p", "2", "--mod-s4")
    assert out.count("dim=") == 9
    dot = tmp_path / "h.dot"
    code, out, _ = run(capsys, "hasse", "--p", "3/2", "--dot", str(dot))
    assert code == 0 and dot.read_text().count("->") == 62
    code, _, err = run(capsys, "hasse", "--p", "1")
    assert code == 2 and "BadParameter" in err


@pytest.mark.parametrize("n, m, line", [
    (3, 4, "open: yes (dim 8 witness verified); finite: no (family v(p))"),
    (3, 3, "open: yes; finite: yes"),
    (2, 4, "open: no; finite: no"),
])
def test_openfinite_command(capsys, n, m, line):
    code, out, _ = run(capsys, "openfinite", "--n", str(n), "--m", str(m))
    assert code == 0 and out.splitlines()[0] == line


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["census"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["census", "--q", "3", "--nm", "three"])
    assert exc.value.code == 2


def test_dump_config_is_parseable():
    v = c34.representative(c34.phi5(2, 4))
    assert parse_config(dump_config(v)) == v
