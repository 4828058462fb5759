import json

import pytest

from pyknotslopes.__main__ import (EXIT_FAILED, EXIT_INPUT, EXIT_OK, EXIT_RESOURCE,
                                   join_option_values, main, parse_pretzel)
from pyknotslopes.diagram import PretzelParameterError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip().startswith(("{", "[")) else out


def test_adequacy_braid(capsys):
    code, record = run(capsys, "adequacy", "--braid", "2: 1 1 1")
    assert code == EXIT_OK
    assert record["A"] and record["B"]
    assert (record["v_A"], record["v_B"]) == (2, 3)
    assert record["c"] == 3


def test_adequacy_pretzels(capsys):
    code, record = run(capsys, "adequacy", "--pretzel", "-2,3,5")
    assert code == EXIT_OK
    assert (record["A"], record["B"]) == (True, False)
    _, record = run(capsys, "adequacy", "--pretzel", "-2,3,-5")
    assert (record["A"], record["B"]) == (False, True)
    _, record = run(capsys, "adequacy", "--pretzel=-2,3,5")
    assert (record["A"], record["B"]) == (True, False)


def test_braid_without_strand_count(capsys):
    code, record = run(capsys, "adequacy", "--braid", "-1 -1 -1")
    assert code == EXIT_OK
    assert record["A"] and record["B"]
    assert (record["v_A"], record["v_B"]) == (3, 2)
    assert record["c_minus"] == 3


def test_join_option_values():
    assert join_option_values(["adequacy", "--pretzel", "-2,3,5", "-v"]) == \
        ["adequacy", "--pretzel=-2,3,5", "-v"]
    assert join_option_values(["slopes", "--braid", "2: 1 1 1"]) == ["slopes", "--braid=2: 1 1 1"]
    assert join_option_values(["adequacy", "--braid", "--unknot"]) == ["adequacy", "--braid", "--unknot"]
    assert join_option_values(["adequacy", "--pretzel"]) == ["adequacy", "--pretzel"]


def test_slopes(capsys):
    _, record = run(capsys, "slopes", "--braid", "3: 1 -2 1 -2")
    assert record["slope_A"]["numerator"] == -4
    assert record["slope_B"]["numerator"] == 4
    _, record = run(capsys, "slopes", "--unknot")
    assert record["slope_A"]["numerator"] == record["slope_B"]["numerator"] == 0


def test_jones(capsys):
    code, record = run(capsys, "jones", "--braid", "2: 1 1 1", "--max-n", "2")
    assert code == EXIT_OK
    assert record["colors"]["2"]["J"]["text"] == "-q^4 + q^3 + q"
    assert record["sequences"] is None

    _, record = run(capsys, "jones", "--unknot", "--max-n", "6")
    assert [entry["J"]["text"] for entry in record["colors"].values()] == ["1"] * 6
    assert record["sequences"]["d2j"] == {"2": 0, "3": 0, "4": 0, "5": 0}


def test_jones_figure_eight(capsys):
    _, record = run(capsys, "jones", "--braid", "3: 1 -2 1 -2", "--max-n", "2")
    assert record["colors"]["2"]["J"]["text"] == "q^2 - q + 1 - q^-1 + q^-2"


def test_verify(capsys):
    code, record = run(capsys, "verify", "--knot", "trefoil", "--max-n", "3")
    assert code == EXIT_OK
    assert record["passed"]
    assert record["a_side"]["estimated"] == 0
    assert record["b_side"]["estimated"] == 6


def test_verify_without_adequate_side(capsys):
    code, record = run(capsys, "verify", "--braid", "2: 1 -1 1", "--max-n", "3")
    assert code == EXIT_OK
    assert not record["applicable"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    from pyknotslopes import jones

    monkeypatch.setattr(jones.SideVerdict, "passed", property(lambda self: False))
    code, record = run(capsys, "verify", "--knot", "trefoil", "--max-n", "3")
    assert code == EXIT_FAILED
    assert not record["passed"]


def test_cable(capsys):
    _, record = run(capsys, "cable", "--knot", "trefoil", "--m", "2", "--emit-pd")
    assert record["c"] == 12
    assert record["w"] == 12
    assert (record["v_A"], record["v_B"]) == (4, 6)
    assert record["maxWidth"] == 8
    assert len(record["pd"]["crossings"]) == 12
    assert run(capsys, "cable", "--unknot", "--m", "0")[0] == EXIT_INPUT


def test_bracket(capsys):
    _, record = run(capsys, "bracket", "--knot", "trefoil")
    assert record["poly_circle"]["text"] == "-A^5 - A^-3 + A^-7"
    assert record["telemetry"]["maxWidth"] == 4
    _, record = run(capsys, "bracket", "--knot", "trefoil", "--engine", "naive")
    assert record["poly_circle"]["text"] == "-A^5 - A^-3 + A^-7"
    assert record["telemetry"] is None


def test_pd_file(capsys, tmp_path):
    path = tmp_path / "trefoil.json"
    path.write_text('{"crossings": [[1, 5, 2, 4], [5, 3, 6, 2], [3, 1, 4, 6]]}', encoding="utf-8")
    _, record = run(capsys, "slopes", "--pd", str(path))
    assert record["name"] == "trefoil"
    assert record["slope_B"]["numerator"] == 6


def test_catalog(capsys):
    _, record = run(capsys, "catalog")
    assert "trefoil" in [entry["name"] for entry in record["entries"]]
    _, record = run(capsys, "catalog", "4_1")
    assert record["kind"] == "pd"


def test_selftest(capsys):
    code, record = run(capsys, "selftest", "--threads", "1")
    assert code == EXIT_OK
    assert record["passed"]
    assert all(entry["passed"] for entry in record["entries"])


def test_text_format(capsys):
    code, out = run(capsys, "adequacy", "--knot", "T(2,1)", "--format", "text")
    assert code == EXIT_OK
    assert "A: yes" in out
    assert "B: no" in out


@pytest.mark.parametrize("argv", [
    ("adequacy", "--braid", "2: 0"),
    ("adequacy", "--pretzel", "3"),
    ("adequacy", "--knot", "7_4"),
    ("slopes", "--braid", "2: 1 1"),
    ("adequacy", "--pd", "does-not-exist.json"),
    ("jones", "--unknot", "--max-n", "1"),
    ("adequacy", "--unknot", "--threads", "0"),
])
def test_input_errors(capsys, argv):
    assert main(list(argv)) == EXIT_INPUT
    assert "pyknotslopes:" in capsys.readouterr().err


def test_config_file_errors(capsys, tmp_path):
    path = tmp_path / "config.json"
    path.write_text('{"engine": "quantum"}', encoding="utf-8")
    assert main(["adequacy", "--unknot", "--config", str(path)]) == EXIT_INPUT


def test_resource_bound(capsys):
    code = main(["bracket", "--knot", "P(-2,3,5)", "--engine", "naive", "--oracle-bound", "4"])
    assert code == EXIT_RESOURCE
    assert "limited to 4 crossings" in capsys.readouterr().err


def test_usage_errors():
    with pytest.raises(SystemExit) as e:
        main(["adequacy"])
    assert e.value.code == 2
    with pytest.raises(SystemExit):
        main(["adequacy", "--unknot", "--knot", "trefoil"])


def test_verbose_logging(capsys):
    main(["jones", "--unknot", "--max-n", "2", "-vv"])
    err = capsys.readouterr().err
    assert "Computing 2 colors of unknot" in err
    assert "Color finished" in err


def test_parse_pretzel():
    assert parse_pretzel("-2, 3,5") == (-2, 3, 5)
    with pytest.raises(PretzelParameterError):
        parse_pretzel("-2,x")
