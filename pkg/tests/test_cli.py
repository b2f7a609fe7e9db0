import json

import pytest

from posemiring import constructions as cons
from posemiring.cli import main
from posemiring.core import parse_psr, to_text


def write_psr(tmp_path, name, A):
    path = tmp_path / name
    path.write_text(to_text(A))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_valid_file(self, tmp_path, capsys):
        path = write_psr(tmp_path, "a.psr", cons.trivial())
        code, out, _ = run(capsys, "verify", path)
        assert code == 0 and out.strip() == "valid"

    def test_invalid_file(self, tmp_path, capsys):
        text = to_text(cons.trivial()).replace("0 1\n1 1", "0 1\n1 0")
        path = tmp_path / "bad.psr"
        path.write_text(text)
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 1 and out.startswith("invalid")

    def test_spec_argument(self, capsys):
        code, out, _ = run(capsys, "verify", "example-2.6:k=2")
        assert code == 0

    def test_parse_error_exit_2(self, tmp_path, capsys):
        path = tmp_path / "junk.psr"
        path.write_text("not a psr file\n")
        code, _, err = run(capsys, "verify", str(path))
        assert code == 2 and err.startswith("error:")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "trivial", "--json")
        assert code == 0
        assert json.loads(out) == {"valid": True, "violations": []}


class TestAnalyze:
    def test_example_2_6(self, capsys):
        code, out, _ = run(capsys, "analyze", "example-2.6:k=2")
        assert code == 0
        assert "Z = {a, b1, b2}" in out
        assert "c1=false c2=false c3=true" in out

    def test_json_keys(self, capsys):
        code, out, _ = run(capsys, "analyze", "trivial", "--json")
        data = json.loads(out)
        assert data["c1"] is True
        assert data["zero_divisors"] == []


class TestGraph:
    def test_shape_line(self, capsys):
        code, out, _ = run(capsys, "graph", "example-2.6:k=2", "--shape")
        assert code == 0 and out.strip() == "star r=2"

    def test_dot_export(self, tmp_path, capsys):
        dot = tmp_path / "g.dot"
        code, _, _ = run(capsys, "graph", "example-2.6:k=1",
                         "--shape", "--dot", str(dot))
        assert code == 0
        assert dot.read_text().startswith("graph zd {")

    def test_json_metrics(self, capsys):
        code, out, _ = run(capsys, "graph", "example-2.6:k=2", "--json")
        data = json.loads(out)
        assert data["shape"] == "star"
        assert data["vertices"] == 3


class TestConstructAndProduct:
    def test_construct_writes_file(self, tmp_path, capsys):
        path = tmp_path / "e.psr"
        code, _, _ = run(capsys, "construct", "example-3.2:k=1",
                         "-o", str(path))
        assert code == 0
        assert parse_psr(path.read_text()).order == 4

    def test_construct_stdout_verifies(self, capsys):
        code, out, _ = run(capsys, "construct", "chain:k=2")
        assert code == 0
        assert parse_psr(out).order == 4

    def test_bad_spec_exit_2(self, capsys):
        code, _, err = run(capsys, "construct", "nonsense:k=1")
        assert code == 2 and "error:" in err

    def test_product(self, tmp_path, capsys):
        a = write_psr(tmp_path, "a.psr", cons.trivial())
        code, out, _ = run(capsys, "product", a, "example-3.2:k=1")
        assert code == 0
        assert parse_psr(out).order == 8


class TestIso:
    def test_isomorphic_exit_0(self, tmp_path, capsys):
        a = write_psr(tmp_path, "a.psr", cons.chain_lattice(1))
        code, out, _ = run(capsys, "iso", a, "chain:k=1")
        assert code == 0 and out.startswith("isomorphic")

    def test_non_isomorphic_exit_1(self, tmp_path, capsys):
        nil = cons.adjoin_z1(cons.trivial())
        a = write_psr(tmp_path, "a.psr", nil)
        code, out, _ = run(capsys, "iso", a, "chain:k=1")
        assert code == 1 and out.strip() == "non-isomorphic"


class TestEnumerate:
    def test_summary_line(self, capsys):
        code, out, _ = run(capsys, "enumerate", "3")
        assert code == 0
        assert out.startswith("order=3 classes=2 labeled=2 seconds=")

    def test_emit_dir(self, tmp_path, capsys):
        out_dir = tmp_path / "census3"
        code, _, _ = run(capsys, "enumerate", "3",
                         "--emit-dir", str(out_dir))
        assert code == 0
        files = sorted(out_dir.glob("*.psr"))
        assert len(files) == 2
        for f in files:
            assert parse_psr(f.read_text()).order == 3

    def test_json(self, capsys):
        code, out, _ = run(capsys, "enumerate", "4", "--json")
        data = json.loads(out)
        assert data["classes"] == 7 and data["labeled"] == 13

    def test_out_of_range_exit_2(self, capsys):
        code, _, err = run(capsys, "enumerate", "9")
        assert code == 2


class TestRing:
    def test_ag_shape(self, capsys):
        code, out, _ = run(capsys, "ring", "ag", "zn:8", "--shape")
        assert code == 0 and out.strip() == "complete n=2"

    def test_ideals(self, capsys):
        code, out, _ = run(capsys, "ring", "ideals", "zn:12", "--json")
        data = json.loads(out)
        assert data["count"] == 6

    def test_semiring_is_psr(self, capsys):
        code, out, _ = run(capsys, "ring", "semiring", "zn:6")
        assert code == 0
        assert parse_psr(out).order == 4

    def test_zdgraph(self, capsys):
        code, out, _ = run(capsys, "ring", "zdgraph", "prod(zn:2,zn:4)",
                           "--shape")
        assert code == 0
        assert out.strip() == "two-star r=1 s=2 (K1+K1+K1+D_2)"

    def test_radicals(self, capsys):
        code, out, _ = run(capsys, "ring", "radicals", "zn:12", "--json")
        data = json.loads(out)
        assert data["nilradical"] == [0, 6]
        assert data["local"] is False

    def test_bad_spec_exit_2(self, capsys):
        code, _, err = run(capsys, "ring", "ideals", "zn:huge")
        assert code == 2


class TestTheorems:
    def test_census_corpus_passes(self, capsys):
        code, out, _ = run(capsys, "theorems", "--corpus", "census:3")
        assert code == 0
        assert "fail=0" in out.splitlines()[-1]

    def test_check_selection(self, capsys):
        code, out, _ = run(capsys, "theorems", "--corpus", "census:2",
                           "--check", "P2.1a,P2.16", "--report", "json")
        data = json.loads(out)
        checks = {row["check"] for row in data["results"]}
        assert checks == {"P2.1a", "P2.16"}
        assert code == 0

    def test_files_corpus(self, tmp_path, capsys):
        write_psr(tmp_path, "one.psr", cons.example_2_6(1))
        code, out, _ = run(capsys, "theorems", "--corpus",
                           f"files:{tmp_path}", "--check", "P2.1a")
        assert code == 0

    def test_unknown_corpus_exit_2(self, capsys):
        code, _, err = run(capsys, "theorems", "--corpus", "what:ever")
        assert code == 2

    def test_unknown_check_exit_2(self, capsys):
        code, _, err = run(capsys, "theorems", "--corpus", "census:2",
                           "--check", "bogus")
        assert code == 2
