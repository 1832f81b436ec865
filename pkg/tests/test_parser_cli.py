"""Expression parsing and the command-line front end."""

import json

import jsonschema
import pytest

from mbfun.cli import main
from mbfun.parser import PolySyntaxError, parse_poly
from mbfun.rationals import Q


class TestParser:
    def test_simple_sum(self):
        p = parse_poly("x^2 + y^2")
        assert p.terms == {(2, 0): Q(1), (0, 2): Q(1)}

    def test_rational_coefficient(self):
        assert parse_poly("3/2*x*y").terms == {(1, 1): Q(3, 2)}

    def test_precedence_and_parentheses(self):
        assert parse_poly("(x + 1)^2") == parse_poly("x^2 + 2*x + 1")
        assert parse_poly("2*x^3") != parse_poly("(2*x)^3")

    def test_unary_minus(self):
        assert parse_poly("-x + 1") == parse_poly("1 - x")

    @pytest.mark.parametrize(
        "text", ["x^(-1)", "x^-2", "x/y", "x +", "(x", "2x", "", "x^y"]
    )
    def test_syntax_errors(self, text):
        with pytest.raises((PolySyntaxError, ValueError)):
            parse_poly(text)

    def test_error_position(self):
        with pytest.raises(PolySyntaxError) as info:
            parse_poly("x + $")
        assert info.value.line == 1 and info.value.column == 5

    @pytest.mark.parametrize(
        "text", ["x^3 - 2*x + 1", "1/2*x*y - y^2", "x", "7/3", "x*y*z - z^2"]
    )
    def test_print_parse_round_trip(self, text):
        p = parse_poly(text)
        assert parse_poly(str(p), p.variables) == p


@pytest.fixture()
def schema():
    import importlib.resources as res

    with res.files("mbfun").joinpath("schemas/report.schema.json").open() as fh:
        return json.load(fh)


def run_json(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr().out
    return rc, out


class TestCLI:
    def test_classic_report(self, capsys, schema):
        rc, out = run_json(capsys, ["bf", "classic", "x^2", "--json"])
        assert rc == 0
        report = json.loads(out)
        jsonschema.validate(report, schema)
        assert report["status"] == "CERTIFIED"
        assert [r for r, _ in report["result"]["roots"]] == ["-1/1", "-1/2"]

    def test_mero_separated_variables(self, capsys, schema):
        rc, out = run_json(capsys, ["bf", "mero", "x", "y", "--m", "0", "--json"])
        assert rc == 0
        report = json.loads(out)
        jsonschema.validate(report, schema)
        assert report["result"]["b"] == "(s + 1)"

    def test_inputs_echo_reparses(self, capsys):
        rc, out = run_json(capsys, ["bf", "mero", "x^2+ 1*x^2", "y", "--json"])
        assert rc == 0
        report = json.loads(out)
        echoed = report["inputs"]["F"]
        assert parse_poly(echoed, ("x", "y")) == parse_poly("2*x^2", ("x", "y"))

    def test_nc_roots_from_chart_file(self, tmp_path, capsys, schema):
        path = tmp_path / "charts.json"
        path.write_text(
            '{"charts":[{"label":"q","a":[3,0],"b":[0,2],"kappa":[0,0]}]}'
        )
        rc, out = run_json(
            capsys, ["nc", "roots", "--charts", str(path), "--m", "0", "--json"]
        )
        assert rc == 0
        report = json.loads(out)
        jsonschema.validate(report, schema)
        assert report["result"]["roots"]["q"] == ["-1/1", "-2/3", "-1/3"]

    def test_jump_report(self, tmp_path, capsys, schema):
        path = tmp_path / "charts.json"
        path.write_text('{"charts":[{"label":"q","a":[2],"b":[0],"kappa":[0]}]}')
        rc, out = run_json(
            capsys, ["jump", "nc", "--charts", str(path), "--upper", "1", "--json"]
        )
        assert rc == 0
        report = json.loads(out)
        jsonschema.validate(report, schema)
        assert report["result"]["jumps"] == ["1/2", "1/1"]
        assert report["result"]["lct"] == "1/2"

    def test_usage_error_exit_code(self, capsys):
        assert main(["bf", "classic", "x^(-1)"]) == 2
        assert main(["nc", "roots", "--charts", "/no/such/file.json"]) == 2

    def test_capability_failure_exit_code(self, capsys, monkeypatch):
        monkeypatch.setenv("MBFUN_MAX_DEGREE", "2")
        assert main(["bf", "classic", "x^2"]) == 1

    def test_json_runs_are_byte_identical(self, capsys):
        _, first = run_json(capsys, ["bf", "classic", "x^2", "--json"])
        _, second = run_json(capsys, ["bf", "classic", "x^2", "--json"])
        assert first == second

    def test_human_output_has_timing_but_json_does_not(self, capsys):
        rc, out = run_json(capsys, ["bf", "classic", "x", "--json"])
        assert "time" not in json.loads(out)
        rc = main(["bf", "classic", "x"])
        human = capsys.readouterr().out
        assert "time" in human
