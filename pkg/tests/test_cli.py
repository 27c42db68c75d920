import json

import pytest

from khtwist.cli import main
from conftest import HOPF_PD

TREFOIL_PD = "X 6 2 3 1; X 2 4 5 3; X 4 6 1 5"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBracket:
    def test_hopf_text(self, capsys):
        code, out, _ = run(capsys, "bracket", "--pd", HOPF_PD.replace("\n", "; "))
        assert code == 0
        assert "-A^6 - A^2 - A^-2 - A^-6" in out
        assert "equal: True" in out

    def test_unknot(self, capsys):
        code, out, _ = run(capsys, "bracket", "--pd", "")
        assert code == 0
        assert "A^2 + A^-2" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "bracket", "--json", "--pd", TREFOIL_PD)
        assert code == 0
        payload = json.loads(out)
        assert payload["equal"] is True
        for degree, re, im in payload["state_sum"]:
            assert isinstance(degree, int) and isinstance(re, int) and isinstance(im, int)

    def test_deterministic_output(self, capsys):
        _, out1, _ = run(capsys, "bracket", "--json", "--pd", TREFOIL_PD)
        _, out2, _ = run(capsys, "bracket", "--json", "--pd", TREFOIL_PD)
        assert out1 == out2


class TestExitCodes:
    def test_parse_error_is_2(self, capsys):
        code, _, err = run(capsys, "bracket", "--pd", "X 1 2 3")
        assert code == 2
        assert "error" in err

    def test_bad_multiplicity_is_2(self, capsys):
        code, _, _ = run(capsys, "bracket", "--pd", "X 1 4 2 3; X 3 2 4 2")
        assert code == 2

    def test_cap_exceeded_is_3(self, capsys):
        code, _, err = run(capsys, "homology", "--pd", TREFOIL_PD, "--homology-cap", "2")
        assert code == 3
        assert "cap" in err

    def test_missing_file_is_2(self, capsys):
        code, _, _ = run(capsys, "bracket", "--file", "/nonexistent/path.pd")
        assert code == 2

    def test_verify_ok_is_0(self, capsys, tmp_path):
        corpus = tmp_path / "c.txt"
        corpus.write_text(f"name: hopf\n{HOPF_PD}\n\nname: trefoil\n{TREFOIL_PD.replace('; ', chr(10))}\n")
        code, out, _ = run(capsys, "verify", "--file", str(corpus))
        assert code == 0
        assert "passed 2 of 2" in out


class TestSubcommands:
    def test_homology_table(self, capsys):
        code, out, _ = run(capsys, "homology", "--pd", HOPF_PD.replace("\n", ";"))
        assert code == 0
        assert "bracket:" in out

    def test_homology_json_schema(self, capsys):
        code, out, _ = run(capsys, "homology", "--json", "--pd", HOPF_PD.replace("\n", ";"))
        payload = json.loads(out)
        assert [2, 6, 1] in payload["ranks"]
        assert [6, -1, 0] in payload["bracket"]

    def test_homology_dump_complex(self, capsys):
        code, out, _ = run(capsys, "homology", "--json", "--dump-complex", "--pd", "X 1 2 2 1")
        payload = json.loads(out)
        assert code == 0
        dump = payload["complex"]
        total = sum(len(v) for v in dump["generators"].values())
        assert total == 6  # 2 + 4 enhanced states across the two smoothings
        assert all(v in (-1, 1) for trips in dump["differentials"].values() for _, _, v in trips)

    def test_homology_torsion_flag(self, capsys):
        code, out, _ = run(capsys, "homology", "--pd", TREFOIL_PD, "--torsion", "--json")
        payload = json.loads(out)
        assert code == 0
        assert any(payload["torsion"].values())

    def test_graphs(self, capsys):
        code, out, _ = run(capsys, "graphs", "--pd", HOPF_PD.replace("\n", ";"))
        assert code == 0
        assert "psi per component [0]" in out

    def test_adequacy(self, capsys):
        code, out, _ = run(capsys, "adequacy", "--pd", "X 1 2 2 1")
        assert code == 0
        assert "plus: " in out

    def test_twist(self, capsys):
        code, out, _ = run(capsys, "twist", "--pd", TREFOIL_PD)
        assert code == 0
        assert "twist number: 1" in out

    def test_faces(self, capsys):
        code, out, _ = run(capsys, "faces", "--pd", "X 1 2 2 1")
        assert code == 0
        assert "3 faces" in out

    def test_skein_one_based_crossing(self, capsys):
        code, out, _ = run(capsys, "skein", "--pd", TREFOIL_PD, "--crossing", "2")
        assert code == 0
        assert "SES exact: True" in out
        assert "lemma identities: True" in out

    def test_skein_crossing_out_of_range(self, capsys):
        code, _, _ = run(capsys, "skein", "--pd", TREFOIL_PD, "--crossing", "9")
        assert code == 2

    def test_verify_json_lines(self, capsys, tmp_path):
        corpus = tmp_path / "c.txt"
        corpus.write_text(f"name: hopf\n{HOPF_PD}\n")
        code, out, _ = run(capsys, "verify", "--file", str(corpus), "--json-lines")
        assert code == 0
        lines = [json.loads(line) for line in out.strip().splitlines()]
        assert lines[0]["name"] == "hopf"
        assert lines[0]["passed"] is True

    def test_verify_skips_reported(self, capsys, tmp_path):
        corpus = tmp_path / "c.txt"
        corpus.write_text(f"name: hopf\n{HOPF_PD}\n\nname: kink\nX 1 2 2 1\n")
        code, out, _ = run(capsys, "verify", "--file", str(corpus))
        assert code == 0
        assert "skipped: not reduced" in out
        assert "passed 1 of 1" in out
