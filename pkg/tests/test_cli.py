import io
import json
from contextlib import redirect_stdout

from gotonum.cli import main


def run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


class TestInfo:
    def test_info_479(self):
        code, out = run_cli("info", "4", "7", "9")
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["frobenius"] == 10
        assert payload["symmetric"] is False
        assert payload["stable_goto"] == 2

    def test_info_human_format(self):
        code, out = run_cli("info", "3", "5", "--format", "human")
        assert code == 0
        assert "frobenius: 7" in out

    def test_info_minimalizes(self):
        code, out = run_cli("info", "4", "6", "7", "10")
        assert code == 0
        assert json.loads(out)["generators"] == [4, 6, 7]


class TestGoto:
    def test_ideal_expression(self):
        code, out = run_cli("goto", "5", "11", "--ideal", "x^40+x^44")
        assert code == 0
        assert json.loads(out)["goto_number"] == 5

    def test_with_dual(self):
        code, out = run_cli("goto", "5", "11", "--ideal", "x^40+x^44", "--dual")
        payload = json.loads(out)
        assert payload["goto_number"] == payload["dual_goto"] == 5

    def test_monomial(self):
        code, out = run_cli("goto", "7", "11", "20", "--monomial", "45")
        assert code == 0
        assert json.loads(out)["goto_number"] == 3

    def test_prime_field(self):
        code, out = run_cli(
            "goto", "5", "11", "--ideal", "x^40+x^44", "--field", "fp:7"
        )
        assert code == 0
        assert json.loads(out)["goto_number"] == 5


class TestTable:
    def test_json(self):
        code, out = run_cli("table", "3", "5", "--max", "10")
        table = json.loads(out)["table"]
        assert table["5"] == 3
        assert table["10"] == 2

    def test_tsv(self):
        code, out = run_cli("table", "2", "3", "--max", "4", "--format", "tsv")
        assert code == 0
        assert out.splitlines() == ["e\tgoto", "2\t1", "3\t1", "4\t1"]


class TestSearch:
    def test_467(self):
        code, out = run_cli("search", "4", "6", "7")
        payload = json.loads(out)
        assert payload["min_goto"] == payload["max_goto"] == 2

    def test_restricted(self):
        code, out = run_cli(
            "search", "5", "11", "--b", "40", "--positions", "4"
        )
        payload = json.loads(out)
        assert payload["max_goto"] == 5
        assert payload["witnesses"]["5"] == "x^40 + x^44"

    def test_tsv_records(self):
        code, out = run_cli(
            "search", "3", "5", "--b", "5", "--positions", "3", "--format", "tsv"
        )
        lines = out.splitlines()
        assert lines[0] == "b\tcoeffs\tgoto"
        assert len(lines) == 3


class TestBoundsAndRlr:
    def test_bounds(self):
        code, out = run_cli("bounds", "4", "7", "9")
        payload = json.loads(out)
        assert payload["rho"] == 2
        assert payload["display_max"] == 3

    def test_rlr(self):
        code, out = run_cli("rlr", "--pure-power", "2,5,5")
        payload = json.loads(out)
        assert payload["goto_number"] == 5
        assert payload["ratios"] == ["5/2", "5/2", "5/2"]


class TestVerifyPaper:
    def test_passes_and_prints_lines(self):
        code, out = run_cli("verify-paper")
        assert code == 0
        lines = out.splitlines()
        passes = [l for l in lines if l.startswith("PASS ")]
        assert len(passes) >= 20
        assert not any(l.startswith("FAIL") for l in lines)
        assert lines[-1].endswith("checks passed")

class TestErrors:
    def test_bad_gcd_exits_two(self):
        code, _ = run_cli("info", "4", "6")
        assert code == 2

    def test_gap_exponent_exits_two(self):
        code, _ = run_cli("goto", "3", "5", "--ideal", "x^4")
        assert code == 2

    def test_dual_on_asymmetric_exits_two(self):
        code, _ = run_cli("goto", "4", "5", "11", "--ideal", "x^12", "--dual")
        assert code == 2

    def test_usage_error_exits_two(self):
        code, _ = run_cli("goto", "3", "5")
        assert code == 2

    def test_unknown_subcommand_exits_two(self):
        code, _ = run_cli("frobble")
        assert code == 2


class TestDeterminism:
    def test_search_byte_identical(self):
        args = ("search", "4", "6", "7", "--format", "tsv")
        _, first = run_cli(*args)
        _, second = run_cli(*args)
        assert first == second

    def test_width_does_not_change_output(self):
        base = ("search", "4", "7", "9", "--b", "7", "--format", "tsv")
        _, serial = run_cli(*base, "--width", "1")
        _, wide = run_cli(*base, "--width", "4")
        assert serial == wide
