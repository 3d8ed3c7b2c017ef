import json
import os
import subprocess
import sys

import pytest

from sqid.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, table_rows


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestGenerate:
    def test_thm1_text(self, capsys):
        code, out, _ = run(capsys, "generate", "--n", "5", "--construction", "thm1",
                           "--l", "1", "--k", "3", "--format", "text")
        assert code == EXIT_OK
        assert "triple [10,12,26], verified" in out

    def test_hurwitz_radon_latex(self, capsys):
        code, out, _ = run(capsys, "generate", "--n", "3", "--construction",
                           "hurwitz-radon", "--format", "latex")
        assert code == EXIT_OK
        assert "[8,8,8]" in out
        assert r"\begin{multline*}" in out and r"\end{multline*}" in out
        assert out.count(r"\right)^2") == 8
        assert "- a_{1}b_{1}" in out

    def test_thm2_k(self, capsys):
        code, out, _ = run(capsys, "generate", "--n", "5", "--construction", "thm2",
                           "--k", "1", "--format", "text")
        assert code == EXIT_OK and "[10,20,30]" in out
        code2, out2, _ = run(capsys, "generate", "--n", "5", "--construction", "thm2",
                             "--kappa", "0", "--format", "text")
        assert code2 == EXIT_OK and out2 == out

    def test_thm1_extended(self, capsys):
        code, out, _ = run(capsys, "generate", "--n", "7", "--construction", "thm1",
                           "--l", "1", "--k", "2", "--extended", "--format", "text")
        assert code == EXIT_OK and "[16,100,124]" in out

    def test_degenerate_warning(self, capsys):
        code, _, err = run(capsys, "generate", "--n", "4", "--construction", "complement",
                           "--format", "text")
        assert code == EXIT_OK
        assert "degenerate" not in err
        code, _, err = run(capsys, "generate", "--n", "5", "--construction", "thm1",
                           "--l", "1", "--k", "5", "--format", "text")
        assert code == EXIT_OK and "degenerate" in err

    def test_refuses_failing_identity(self, capsys):
        code, out, err = run(capsys, "generate", "--n", "3", "--construction",
                             "hurwitz-radon", "--twist", "clifford")
        assert code == EXIT_FAIL and out == "" and "failed verification" in err

    @pytest.mark.parametrize("argv", [
        ["generate", "--n", "5", "--construction", "thm1", "--l", "1"],
        ["generate", "--n", "5", "--construction", "thm1", "--l", "3", "--k", "2"],
        ["generate", "--n", "5", "--construction", "thm2"],
        ["generate", "--n", "5", "--construction", "thm2", "--k", "1", "--kappa", "0"],
        ["generate", "--n", "6", "--construction", "thm2", "--k", "1"],
        ["generate", "--n", "64", "--construction", "hurwitz-radon"],
        ["generate", "--n", "3", "--construction", "complement"],
    ])
    def test_bad_params(self, capsys, argv):
        code, out, _ = run(capsys, *argv)
        assert code == EXIT_USAGE and out == ""


class TestVerify:
    def write(self, capsys, tmp_path, *argv):
        path = tmp_path / "ident.json"
        code, _, _ = run(capsys, "generate", *argv, "--output", str(path))
        assert code == EXIT_OK
        return path

    def test_round_trip(self, capsys, tmp_path):
        path = self.write(capsys, tmp_path, "--n", "6", "--construction", "thm1",
                          "--l", "1", "--k", "2")
        code, out, _ = run(capsys, "verify", str(path))
        assert code == EXIT_OK
        assert "symbolic: ok" in out and "numeric:  ok" in out
        assert "[12,44,60]" in out

    def test_flipped_sign(self, capsys, tmp_path):
        path = self.write(capsys, tmp_path, "--n", "4", "--construction", "hurwitz-radon")
        data = json.loads(path.read_text())
        term = data["coeffs"][3]["terms"][1]
        term["sign"] = -term["sign"]
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == EXIT_FAIL
        assert "symbolic: FAIL" in out and "numeric:  FAIL" in out

    def test_wrong_stored_triple(self, capsys, tmp_path):
        path = self.write(capsys, tmp_path, "--n", "3", "--construction", "hurwitz-radon")
        data = json.loads(path.read_text())
        data["triple"]["N"] = 7
        path.write_text(json.dumps(data))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == EXIT_FAIL and "file says" in out

    @pytest.mark.parametrize("text", [
        "{not json",
        '{"n": 3}',
        '{"n": 1, "twist": "octonion", "A": [0], "B": [0], "triple": {"r": 1, "s": 1, "N": 1},'
        ' "coeffs": [{"z": 0, "terms": [{"x": 0, "y": 0, "sign": 3}]}]}',
        '{"n": 1, "twist": "octonion", "A": [5], "B": [0], "triple": {"r": 1, "s": 1, "N": 1},'
        ' "coeffs": [{"z": 5, "terms": [{"x": 5, "y": 0, "sign": 1}]}]}',
    ])
    def test_malformed(self, capsys, tmp_path, text):
        path = tmp_path / "bad.json"
        path.write_text(text)
        code, _, err = run(capsys, "verify", str(path))
        assert code == EXIT_USAGE and err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "verify", str(tmp_path / "nope.json"))
        assert code == EXIT_USAGE


class TestSearch:
    def test_n3(self, capsys):
        code, out, _ = run(capsys, "search", "--n", "3")
        assert code == EXIT_OK and "maximum cardinality: 8" in out

    def test_n4(self, capsys):
        code, out, _ = run(capsys, "search", "--n", "4")
        assert "maximum cardinality: 8" in out
        assert "attains maximum: True" in out

    def test_n5(self, capsys):
        code, out, _ = run(capsys, "search", "--n", "5")
        assert code == EXIT_OK
        assert "maximum cardinality: 10" in out
        assert "card 10, valid True" in out

    def test_bound(self, capsys):
        code, _, _ = run(capsys, "search", "--n", "7")
        assert code == EXIT_USAGE


class TestTable:
    def triples(self, n_max, n):
        return {tuple(r["constructed"]) for r in table_rows(n_max) if r["n"] == n}

    def test_n6(self):
        assert {(12, 38, 58), (12, 44, 60)} <= self.triples(6, 6)

    def test_n7(self):
        got = self.triples(7, 7)
        assert {(14, 88, 120), (14, 96, 122), (14, 104, 124)} <= got

    def test_n8(self):
        assert {(16, 218, 250), (16, 228, 252)} <= self.triples(8, 8)

    def test_text_and_json(self, capsys):
        code, out, _ = run(capsys, "table", "--n-max", "5", "--verify")
        assert code == EXIT_OK
        assert "thm1(n=5,l=1,k=3)" in out and "NOT VERIFIED" not in out
        code, out, _ = run(capsys, "table", "--n-max", "4", "--format", "json")
        rows = json.loads(out)
        assert rows[0] == {"n": 1, "construction": "hurwitz-radon(n=1)",
                           "predicted": [2, 2, 2], "constructed": [2, 2, 2], "match": True}

    def test_bound(self, capsys):
        code, _, _ = run(capsys, "table", "--n-max", "13")
        assert code == EXIT_USAGE


class TestClifford:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "clifford", "--n", "3", "--case", "2n")
        assert code == EXIT_OK and "Cl(0,6)" in out and "relations verified" in out

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "clifford", "--n", "2", "--case", "2n-2", "--format", "csv")
        assert code == EXIT_OK
        blocks = [b for b in out.split("# G_x") if b]
        assert len(blocks) == 2
        rows = blocks[0].strip().splitlines()[1:]
        assert len(rows) == 4 and all(len(r.split(",")) == 4 for r in rows)

    def test_triplets(self, capsys):
        code, out, _ = run(capsys, "clifford", "--n", "3", "--case", "2n", "--format", "triplets")
        assert code == EXIT_OK
        assert out.count("row,col,sign") == 6
        assert len(out.strip().splitlines()) == 6 * (2 + 8)

    def test_bad_case(self, capsys):
        code, _, _ = run(capsys, "clifford", "--n", "4", "--case", "2n")
        assert code == EXIT_USAGE


def test_rho(capsys):
    code, out, _ = run(capsys, "rho", "16", "128")
    assert code == EXIT_OK
    assert out == "rho(16) = 9\nrho(128) = 16\n"
    assert run(capsys, "rho", "0")[0] == EXIT_USAGE


def test_byte_stable(capsys):
    argv = ["generate", "--n", "5", "--construction", "thm1", "--l", "2", "--k", "3"]
    first = run(capsys, *argv)[1]
    assert first == run(capsys, *argv)[1]
    assert first.endswith("\n")


def test_subprocess_and_work_bound():
    argv = [sys.executable, "-m", "sqid", "generate", "--n", "5", "--construction",
            "hurwitz-radon", "--format", "text"]
    ok = subprocess.run(argv, capture_output=True, text=True)
    assert ok.returncode == 0 and "[10,32,32]" in ok.stdout
    env = dict(os.environ, SQID_WORK_BOUND="10")
    capped = subprocess.run(argv, capture_output=True, text=True, env=env)
    assert capped.returncode == EXIT_USAGE
