import csv
import io
import json

import pytest

from partinv import EquivalenceClasses, Partition, VerificationReport, classify, g_vector
from partinv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_text_report(self, capsys):
        code, out, _ = run(capsys, "analyze", "8,2,1")
        assert code == 0
        assert "g-vector: 11,4,1" in out
        assert "h-vector: 6,1,1" in out
        assert "polynomial: x^2 - 4x + 11" in out
        assert "dimension: 19" in out
        assert "blocks: R^6 x M_2(R) x M_3(R)" in out

    def test_square_polynomial(self, capsys):
        code, out, _ = run(capsys, "analyze", "4,4,1")
        assert code == 0
        assert "polynomial: x^2 - 6x + 9" in out

    def test_not_semisimple_message(self, capsys):
        code, out, _ = run(capsys, "analyze", "4,2", "--char", "2")
        assert code == 0
        assert "not semisimple (2 divides 4 and 2)" in out
        assert "blocks:" not in out

    def test_json_fields(self, capsys):
        code, out, _ = run(capsys, "analyze", "8,2,1", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["partition"] == [8, 2, 1]
        assert data["g_vector"] == [11, 4, 1]
        assert data["h_vector"] == [6, 1, 1]
        assert data["polynomial"]["coefficients"] == [11, -4, 1]
        assert data["dimension"] == 19
        assert data["semisimple"] is True
        assert data["wedderburn"] == {"1": 6, "2": 1, "3": 1}
        # reconstruct the emitting values from the document
        lam = Partition(tuple(data["partition"]))
        assert list(g_vector(lam).values) == data["g_vector"]

    def test_not_closed_field_drops_blocks(self, capsys):
        code, out, _ = run(capsys, "analyze", "8,2,1", "--not-closed")
        assert code == 0
        assert "blocks: unavailable" in out

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "analyze", "4,0,1")
        assert code == 2
        assert "positive" in err

    def test_bad_characteristic(self, capsys):
        code, _, err = run(capsys, "analyze", "4,2", "--char", "6")
        assert code == 2
        assert "prime" in err


class TestCompare:
    def test_equivalent_and_isomorphic(self, capsys):
        code, out, _ = run(capsys, "compare", "8,2,1", "7,2,2")
        assert code == 0
        assert "equivalent: yes" in out
        assert "isomorphic: yes" in out
        assert "morita: yes" in out

    def test_equal_polynomial_different_totals(self, capsys):
        code, out, _ = run(capsys, "compare", "4,2,2", "2,1,1")
        assert code == 0
        assert "equivalent: yes" in out
        assert "isomorphic: no" in out

    def test_morita_across_totals(self, capsys):
        code, out, _ = run(capsys, "compare", "4,1", "4")
        assert code == 0
        assert "isomorphic: no" in out
        assert "morita: yes" in out
        assert "simple blocks: 4 vs 4" in out
        assert "signed values: -4 vs 4" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "compare", "4,1", "4", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["isomorphic"] is False
        assert data["morita"] is True
        assert data["left"]["signed_value"] == -4
        assert data["right"]["signed_value"] == 4

    def test_not_semisimple_is_a_precondition_error(self, capsys):
        code, _, err = run(capsys, "compare", "4,2", "3,3", "--char", "2")
        assert code == 2
        assert "not semisimple" in err

    def test_not_closed_is_a_precondition_error(self, capsys):
        code, _, err = run(capsys, "compare", "4,1", "3,2", "--not-closed")
        assert code == 2
        assert "closed" in err


class TestIsoMoritaSubcommands:
    def test_iso(self, capsys):
        code, out, _ = run(capsys, "iso", "17,11,8,2", "17,11,6,4")
        assert code == 0
        assert "isomorphic: yes" in out

    def test_morita(self, capsys):
        code, out, _ = run(capsys, "morita", "2,1", "1,1")
        assert code == 0
        assert "morita: no" in out
        assert "simple blocks: 2 vs 1" in out


class TestClassify:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "classify", "3", "11")
        assert code == 0
        assert "p(3,11) = 10" in out
        assert "i(3,11) = 5" in out
        assert "e(3,11): 1:2 2:2 4:1" in out
        assert "8,2,1 | 7,2,2 | 6,4,1 | 5,4,2" in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "classify", "3", "11", "--format", "json")
        assert code == 0
        grouped = EquivalenceClasses.from_json_dict(json.loads(out))
        assert grouped == classify(3, 11)

    def test_csv_round_trip(self, capsys):
        code, out, _ = run(capsys, "classify", "3", "11", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["parts", "g_vector", "class_id"]
        assert len(rows) == 11
        assert all(len(row) == 3 for row in rows)

    def test_precondition(self, capsys):
        code, _, err = run(capsys, "classify", "4", "3")
        assert code == 2

    def test_resource_bound(self, capsys):
        code, _, err = run(capsys, "classify", "40", "400")
        assert code == 4
        assert "limit" in err


class TestSelfEquivalent:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "self-equivalent", "3", "9")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "self-equivalent in P(3,9): 2"
        assert lines[1:] == ["4,4,1", "3,3,3"]

    def test_json(self, capsys):
        code, out, _ = run(capsys, "self-equivalent", "3", "9", "--format", "json")
        data = json.loads(out)
        assert data["self_equivalent"] == [[4, 4, 1], [3, 3, 3]]


class TestCount:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "count", "3", "7")
        assert code == 0
        assert "p(3,7) = 4" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "count", "3", "7", "--format", "json")
        data = json.loads(out)
        assert data["p"] == 4
        assert data["i"] == 3
        assert data["e"] == {"1": 2, "2": 1}


class TestVerify:
    def test_small_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "--nmax", "5")
        assert code == 0
        assert "all checks passed" in out

    def test_empty_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "--nmax", "0")
        assert code == 0

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "verify", "--nmax", "4", "--format", "json")
        assert code == 0
        report = VerificationReport.from_json_dict(json.loads(out))
        assert report.passed

    def test_nmax_bound(self, capsys):
        code, _, err = run(capsys, "verify", "--nmax", "26")
        assert code == 4

    def test_failures_exit_one(self, capsys, monkeypatch):
        from partinv import cli
        from partinv.oracles import Failure, FamilyResult, VerificationReport

        broken = VerificationReport(
            families=(
                FamilyResult(
                    family="g-vector vs subset enumeration",
                    instances=3,
                    failures=(Failure("4,2", "(6, 2)", "(6, 3)"),),
                ),
            )
        )
        monkeypatch.setattr(cli, "verify_all", lambda *a, **kw: broken)
        code, out, _ = run(capsys, "verify", "--nmax", "5")
        assert code == 1
        assert "FAIL" in out
        assert "4,2" in out

    def test_matrix_cap_bound(self, capsys):
        code, _, err = run(capsys, "verify", "--nmax", "5", "--matrix-cap", "99")
        assert code == 4


class TestHarness:
    def test_unknown_command_is_input_error(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_missing_arguments(self, capsys):
        assert main(["analyze"]) == 2

    def test_determinism(self, capsys):
        first = run(capsys, "classify", "3", "11", "--format", "json")
        second = run(capsys, "classify", "3", "11", "--format", "json")
        assert first == second

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
