"""Command-line tests through click's CliRunner."""
import csv
import io
import json
import logging

import pytest
from click.testing import CliRunner

from conftest import FINAL_TABLE
from lincomp.complexity import feedback_polynomial
from lincomp.sequence import generate
from main import cli
from ntheory.cyclotomy import build_context


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, [str(a) for a in args])


class TestLc:
    @pytest.mark.parametrize("method", ["closed", "gcd", "bm", "smatrix"])
    def test_first_table_entry(self, runner, method):
        result = invoke(runner, "lc", "--p", 17, "--q", 41, "--method", method)
        assert result.exit_code == 0, result.stdout
        assert result.stdout.strip() == "696"

    def test_wrong_order_is_precondition_failure(self, runner):
        result = invoke(runner, "lc", "--p", 17, "--q", 19, "--method", "closed")
        assert result.exit_code == 3

    def test_composite_is_input_error(self, runner, caplog):
        with caplog.at_level(logging.DEBUG):
            result = invoke(runner, "lc", "--p", 15, "--q", 41)
        assert result.exit_code == 2
        assert result.stderr.splitlines() == ["error: 15 is not an odd prime"]
        assert not [r for r in caplog.records if r.levelno >= logging.ERROR]

    def test_foreign_root_is_input_error(self, runner):
        result = invoke(runner, "lc", "--p", 17, "--q", 41, "--g", 2)
        assert result.exit_code == 2

    def test_smatrix_degree_limit(self, runner):
        result = invoke(runner, "lc", "--p", 17, "--q", 41, "--method", "smatrix", "--smatrix-max-degree", 16)
        assert result.exit_code == 3

    def test_verbose(self, runner):
        result = invoke(runner, "lc", "--p", 17, "--q", 73, "--verbose")
        lines = result.stdout.splitlines()
        assert lines[0] == "1204"
        assert lines[1] == "g=5 d=8 e=144"
        assert "case 5: L = pq-1-(q-1)/2" in lines
        assert lines[-1] == "deg m(x)=1204"

    def test_hex(self, runner):
        result = invoke(runner, "lc", "--p", 17, "--q", 41, "--hex")
        value = result.stdout.splitlines()[1]
        assert len(value) == 2 * ((696 + 8) // 8)

    def test_feedback(self, runner):
        result = invoke(runner, "lc", "--p", 17, "--q", 41, "--feedback")
        assert result.exit_code == 0
        expected = feedback_polynomial(generate(build_context(17, 41))).to_hex()
        assert result.stdout.splitlines() == ["696", expected]


class TestTable:
    def test_csv_reproduces_final_table(self, runner, final_table):
        result = invoke(runner, "table", "--max", 500)
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "p,q,L_pq,L_qp"
        assert lines[1] == "17,41,696,696"
        rows = [tuple(int(v) for v in row.values()) for row in csv.DictReader(io.StringIO(result.stdout))]
        assert rows == final_table

    def test_json(self, runner):
        result = invoke(runner, "table", "--max", 140, "--format", "json")
        records = json.loads(result.stdout)
        assert {"p": 113, "q": 137, "L_pq": 11672, "L_qp": 15480} in records
        assert len(records) == len([row for row in FINAL_TABLE if row[1] <= 140])

    def test_markdown(self, runner):
        result = invoke(runner, "table", "--max", 41, "--format", "markdown")
        assert result.stdout.splitlines() == ["| p | q | L_pq | L_qp |", "|---|---|---|---|", "| 17 | 41 | 696 | 696 |"]

    def test_no_pairs(self, runner):
        result = invoke(runner, "table", "--max", 40)
        assert result.exit_code == 0
        assert result.stdout.splitlines() == ["p,q,L_pq,L_qp"]

    def test_threads_keep_order(self, runner):
        serial = invoke(runner, "table", "--max", 140, "--threads", 1)
        pooled = invoke(runner, "table", "--max", 140, "--threads", 2)
        assert serial.exit_code == pooled.exit_code == 0
        assert pooled.stdout == serial.stdout
        assert len(pooled.stdout.splitlines()) > 2


class TestVerify:
    def test_up_to_100(self, runner):
        result = invoke(runner, "verify", "--max", 100)
        assert result.exit_code == 0, result.stdout
        lines = result.stdout.splitlines()
        assert sum(line.startswith("PASS") for line in lines) == 8
        assert lines[-1] == "8 pairs: 8 passed, 0 failed"

    def test_no_pairs(self, runner):
        result = invoke(runner, "verify", "--max", 16)
        assert result.exit_code == 0
        assert result.stdout.strip() == "no pairs"

    def test_seeded_roots(self, runner):
        result = invoke(runner, "verify", "--max", 41, "--methods", "closed,gcd", "--seed", 7)
        assert result.exit_code == 0
        assert result.stdout.startswith("PASS p=17 q=41 ")
        assert "L(p,q)=696 L(q,p)=696" in result.stdout

    def test_smatrix_skip(self, runner):
        result = invoke(runner, "verify", "--max", 41, "--methods", "closed,smatrix", "--smatrix-max-degree", 16)
        assert result.exit_code == 0
        assert "SKIP smatrix" in result.stdout

    def test_unknown_method(self, runner):
        result = invoke(runner, "verify", "--max", 100, "--methods", "closed,magic")
        assert result.exit_code == 2


class TestClassify:
    def test_73_17(self, runner):
        result = invoke(runner, "classify", "--p", 73, "--q", 17)
        assert result.exit_code == 0
        assert result.stdout.splitlines() == [
            "Res(2,p)=8 Res(2,q)=2 Res(p,q)=1",
            "case 12: L = pq-1-(p-1)(q-1)/4-(p-1)/2",
            "epsilon=1/2 kappa=0 eta=1/4",
            "L(p,q)=916",
        ]


class TestSequence:
    def test_balance(self, runner):
        result = invoke(runner, "sequence", "--p", 17, "--q", 41, "--balance")
        assert result.stdout.strip() == "ones=348 zeros=349"

    def test_ascii(self, runner):
        result = invoke(runner, "sequence", "--p", 17, "--q", 41)
        lines = result.stdout.splitlines()
        assert len(lines) == 11
        assert set("".join(lines)) == {"0", "1"}
        assert len("".join(lines)) == 697
        assert lines[0][0] == "0"

    def test_binary(self, runner):
        result = invoke(runner, "sequence", "--p", 17, "--q", 41, "--format", "binary")
        assert len(result.stdout_bytes) == (697 + 7) // 8


class TestSmatrix:
    def test_17_41(self, runner):
        result = invoke(runner, "smatrix", "--p", 17, "--q", 41)
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0].startswith("GF(2^40) modulus ")
        assert len(lines) == 1 + 9 + 2
        assert lines[-2] == "zeros: block=0 column=0 row=0 corner=1"
        assert lines[-1] == "L=696"
