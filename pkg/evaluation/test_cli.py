"""
Tests for the tkkforge command line, the structure-file format and the
acceptance evaluation set.
"""
import json
import sys
from pathlib import Path

import pytest
from typer.testing import CliRunner

sys.path.insert(0, str(Path(__file__).parent.parent))

from cli.main import app  # noqa: E402

runner = CliRunner()


# ============================================================================
# FIXTURES
# ============================================================================

@pytest.fixture
def evalset_path():
    """Path to the acceptance evaluation set."""
    return Path(__file__).parent / "acceptance.evalset.json"


@pytest.fixture
def evalset(evalset_path):
    """Load the acceptance evaluation set."""
    with open(evalset_path) as f:
        return json.load(f)


def _cases():
    with open(Path(__file__).parent / "acceptance.evalset.json") as f:
        return json.load(f)["test_cases"]


# ============================================================================
# STRUCTURE FILES
# ============================================================================

class TestFileFormat:
    """Parsing, emitting and digests of structure files."""

    @pytest.mark.parametrize("name", ["mat2sym", "rect(1,2)", "sl4block"])
    def test_emitted_file_rebuilds_the_same_structure(self, name):
        from cli.catalog import catalog
        from cli.fileformat import emit, from_structure, parse, to_structure

        source = catalog(name)
        assert from_structure(to_structure(parse(emit(source)))) == source

    def test_pair_with_empty_component_reads_back(self, qq):
        from cli.fileformat import emit, from_structure, parse, to_structure
        from freemod import FreeModule, TrilinearMap
        from jordan import JordanPair
        from tkkcore import utkk

        minus, plus = FreeModule(qq, ("a",)), FreeModule(qq, ())
        z = JordanPair(
            minus,
            plus,
            TrilinearMap.zero((minus, plus, minus), minus),
            TrilinearMap.zero((plus, minus, plus), plus),
            name="half",
        )
        assert utkk(z).dim == 1
        back = to_structure(parse(emit(from_structure(z))))
        assert back == z
        assert back.plus.dim == 0

    def test_duplicate_pair_labels_rejected(self):
        from cli.fileformat import parse
        from errors import ParseError

        with pytest.raises(ParseError) as exc_info:
            parse(json.dumps({"kind": "jordan_pair", "minus": ["a", "a"], "plus": ["b"]}))
        assert exc_info.value.field == "minus"

    def test_digest_is_stable(self):
        from cli.catalog import catalog
        from cli.fileformat import digest

        assert digest(catalog("spin(2)")) == digest(catalog("spin(2)"))
        assert digest(catalog("spin(2)")) != digest(catalog("spin(3)"))

    def test_bad_json_reports_line(self):
        from cli.fileformat import parse
        from errors import ParseError

        with pytest.raises(ParseError) as exc_info:
            parse('{\n  "kind": "jordan_algebra",\n  oops\n}')
        assert exc_info.value.line == 3

    def test_unknown_field_rejected(self):
        from cli.fileformat import parse
        from errors import ParseError

        with pytest.raises(ParseError) as exc_info:
            parse(json.dumps({"kind": "jordan_algebra", "field": "complex", "basis": ["1"]}))
        assert exc_info.value.field == "field"

    def test_scalar_must_be_a_string(self):
        from cli.fileformat import parse
        from errors import ParseError

        data = {"kind": "jordan_algebra", "basis": ["1"], "product": [[0, 0, 0, 1]], "identity": ["1"]}
        with pytest.raises(ParseError):
            parse(json.dumps(data))

    def test_index_out_of_range(self):
        from cli.fileformat import parse
        from errors import ParseError

        data = {"kind": "jordan_algebra", "basis": ["1"], "product": [[0, 1, 0, "1"]], "identity": ["1"]}
        with pytest.raises(ParseError):
            parse(json.dumps(data))

    def test_with_field_revalidates_scalars(self):
        from cli.catalog import catalog
        from cli.fileformat import to_structure, with_field
        from errors import ParseError
        from exactla import Field

        moved = with_field(catalog("diag(2)"), Field.prime(7))
        assert moved.field == "p:7"
        assert to_structure(moved).field == Field.prime(7)
        # 5 is not invertible over GF(5)
        with pytest.raises(ParseError):
            with_field(catalog("mat2sym").model_copy(update={"identity": ["1/5", "0", "0", "1"]}), Field.prime(5))


# ============================================================================
# COMMAND LINE
# ============================================================================

@pytest.mark.usefixtures("restore_logging")
class TestCommandLine:
    """Subcommands, exit codes and reports."""

    def test_catalog_list(self):
        result = runner.invoke(app, ["catalog", "list"])
        assert result.exit_code == 0
        names = result.output.split()
        for expected in ("k1", "mat2sym", "diag(2)", "rect(1,2)", "sl4block", "abelian3"):
            assert expected in names

    def test_catalog_emit_to_file_and_check_it(self, tmp_path):
        path = tmp_path / "mat2sym.json"
        result = runner.invoke(app, ["catalog", "emit", "mat2sym", "--output", str(path)])
        assert result.exit_code == 0
        assert json.loads(path.read_text())["kind"] == "jordan_algebra"

        result = runner.invoke(app, ["check", str(path)])
        assert result.exit_code == 0
        assert "[PASS] jordan_algebra_axioms" in result.output

    def test_file_field_must_match_option(self, tmp_path):
        path = tmp_path / "k1.json"
        runner.invoke(app, ["catalog", "emit", "k1", "--output", str(path)])
        result = runner.invoke(app, ["check", str(path), "--field", "p:7"])
        assert result.exit_code == 2

    def test_malformed_file_exits_2(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{ not json")
        result = runner.invoke(app, ["check", str(path)])
        assert result.exit_code == 2
        assert "error" in result.output

    def test_unknown_catalog_name_exits_2(self):
        result = runner.invoke(app, ["catalog", "emit", "diag(99)"])
        assert result.exit_code == 2

    def test_build_writes_lie_algebra(self, tmp_path):
        path = tmp_path / "utkk.json"
        result = runner.invoke(app, ["build", "utkk", "rect(1,2)", "--output", str(path)])
        assert result.exit_code == 0
        written = json.loads(path.read_text())
        assert written["kind"] == "lie_graded"
        assert sorted(written["degrees"]) == [-1, -1, 0, 0, 0, 0, 1, 1]

        # the emitted algebra is itself a valid input
        result = runner.invoke(app, ["verify", "theorem-a", str(path)])
        assert result.exit_code == 0

    def test_theorem_b_on_lie_input_uses_its_involution(self, tmp_path):
        path = tmp_path / "report.json"
        result = runner.invoke(app, ["verify", "theorem-b", "sl2", "--report", str(path)])
        assert result.exit_code == 0, result.output
        verdicts = {v["name"]: v["pass"] for v in json.loads(path.read_text())["verdicts"]}
        assert verdicts["involutive_roundtrip_iso"] is True

        # without an involution a Lie input is the wrong kind for this claim
        result = runner.invoke(app, ["verify", "theorem-b", "sl4block"])
        assert result.exit_code == 2

    def test_report_json(self, tmp_path):
        path = tmp_path / "report.json"
        result = runner.invoke(app, ["homology", "h2coh", "abelian3", "--m", "2", "--seed", "5", "--report", str(path)])
        assert result.exit_code == 0
        report = json.loads(path.read_text())
        assert report["command"] == "homology h2coh abelian3 2"
        assert report["seed"] == 5
        assert report["dimensions"]["h2coh_2"] == 2
        assert all("pass" in v for v in report["verdicts"])
        assert len(report["input_digest"]) == 64

    def test_timing_included_on_request(self, tmp_path):
        path = tmp_path / "report.json"
        result = runner.invoke(app, ["build", "tkk", "k1", "--timing", "--report", str(path)])
        assert result.exit_code == 0
        assert "timing" in json.loads(path.read_text())

    def test_prime_field_option(self):
        result = runner.invoke(app, ["build", "tkk", "spin(2)", "--field", "p:7"])
        assert result.exit_code == 0
        assert "total = 10" in result.output


# ============================================================================
# EVALUATION SET TESTS
# ============================================================================

class TestEvaluationSet:
    """Structure of the acceptance set."""

    def test_evalset_loads(self, evalset):
        assert "test_cases" in evalset
        assert len(evalset["test_cases"]) > 0

    def test_evalset_has_required_fields(self, evalset):
        required_fields = ["eval_set_id", "name", "test_cases", "evaluation_metrics"]
        for field in required_fields:
            assert field in evalset, f"Missing required field: {field}"

    def test_all_test_cases_valid(self, evalset):
        for test_case in evalset["test_cases"]:
            assert "test_id" in test_case
            assert test_case["args"]
            assert test_case["expected_exit_code"] in (0, 1, 2)
            if test_case["expected_exit_code"] == 2:
                assert not test_case["expected_verdicts"]

    def test_metric_weights_sum_to_one(self, evalset):
        total = sum(m["weight"] for m in evalset["evaluation_metrics"].values())
        assert total == pytest.approx(1.0)


@pytest.mark.usefixtures("restore_logging")
@pytest.mark.parametrize("case", _cases(), ids=lambda c: c["test_id"])
def test_acceptance_case(case, tmp_path):
    """Replay one acceptance case through the command line."""
    report_path = tmp_path / "report.json"
    result = runner.invoke(app, [*case["args"], "--report", str(report_path)])
    assert result.exit_code == case["expected_exit_code"], result.output

    if case["expected_exit_code"] == 2:
        assert not report_path.exists()
        return

    report = json.loads(report_path.read_text())
    verdicts = {v["name"]: v["pass"] for v in report["verdicts"]}
    for name, expected in case["expected_verdicts"].items():
        assert verdicts.get(name) is expected, f"{name}: {verdicts.get(name)}"
    for key, expected in case["expected_dimensions"].items():
        assert report["dimensions"][key] == expected, key
