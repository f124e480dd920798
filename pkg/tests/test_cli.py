import json
import subprocess
import sys

import pytest

from perfcolor.cli import main
from perfcolor.coloring import parse_coloring
from perfcolor.graph import parse_graph

PAW_COL = "c paw\np edge 4 4\ne 1 2\ne 1 3\ne 2 3\ne 3 4\n"
K33 = "n 6\n" + "".join(f"{a} {b}\n" for a in range(3) for b in range(3, 6))
C5 = "n 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"
C4 = "n 4\n0 1\n1 2\n2 3\n0 3\n"
K222 = "n 6\n" + "".join(f"{u} {v}\n" for u in range(6) for v in range(u + 1, 6) if u // 2 != v // 2)
K4_P3 = "n 7\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n4 5\n5 6\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestRecognize:
    def test_paw(self, write, capsys):
        code, out, _ = run(["recognize", write("paw.col", PAW_COL)], capsys)
        assert code == 10
        assert "certificate: induced-paw 0 1 2 3" in out

    def test_k33(self, write, capsys):
        code, out, _ = run(["recognize", write("k33.txt", K33), "--json"], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["verdict"] is True
        assert report["components"][0]["class"] == "bipartite"
        assert report["palette_size"] == 2 and "certificate" not in report

    def test_c5(self, write, capsys):
        code, out, _ = run(["recognize", write("c5.txt", C5)], capsys)
        assert code == 10 and "odd-hole 0 1 2 3 4" in out

    def test_json_round_trip(self, write, capsys):
        for text in (PAW_COL, K33, K4_P3):
            _, out, _ = run(["recognize", write("g.col" if text is PAW_COL else "g.txt", text), "--json"], capsys)
            report = json.loads(out)
            assert json.dumps(report, indent=2, sort_keys=True) + "\n" == out
            assert all(v >= 0 for v in report["timing_ns"].values())
            assert ("certificate" in report) != ("palette_size" in report)

    def test_missing_file(self, tmp_path, capsys):
        code, _, err = run(["recognize", str(tmp_path / "nope.txt")], capsys)
        assert code == 2 and "cannot read" in err

    def test_parse_error(self, write, capsys):
        code, _, err = run(["recognize", write("bad.txt", "0 1\n1 x\n")], capsys)
        assert code == 2 and "line 2" in err

    def test_self_loop_is_input_error(self, write, capsys):
        code, _, _ = run(["recognize", write("loop.txt", "0 0\n")], capsys)
        assert code == 2

    def test_header_mismatch_warns(self, write, capsys):
        code, _, err = run(["recognize", write("w.col", "p edge 2 3\ne 1 2\n")], capsys)
        assert code == 0 and "warning" in err


class TestColor:
    def test_octahedron(self, write, capsys, tmp_path):
        out_path = tmp_path / "k222.colr"
        code, _, _ = run(["color", write("k222.txt", K222), "--out", str(out_path)], capsys)
        assert code == 0
        c = parse_coloring(out_path.read_text(), 6)
        assert len(set(c.color)) == 3
        code, _, _ = run(["verify", write("k222b.txt", K222), str(out_path), "--mode", "perfect"], capsys)
        assert code == 0

    def test_k4_p3_palette(self, write, capsys, tmp_path):
        code, out, _ = run(["color", write("g.txt", K4_P3), "--out", str(tmp_path / "c")], capsys)
        assert code == 0 and "palette size: 4" in out

    def test_paw_no_file(self, write, capsys, tmp_path):
        out_path = tmp_path / "paw.colr"
        code, _, err = run(["color", write("paw.col", PAW_COL), "--out", str(out_path)], capsys)
        assert code == 10 and "induced-paw" in err
        assert not out_path.exists()

    def test_stdout(self, write, capsys):
        code, out, _ = run(["color", write("c4.txt", C4)], capsys)
        assert code == 0 and out == "0 0\n1 1\n2 0\n3 1\n"


class TestVerify:
    def test_c4_perfect(self, write, capsys):
        code, _, _ = run(["verify", write("c4.txt", C4), write("c", "0 0\n1 1\n2 0\n3 1\n"), "--mode", "perfect"], capsys)
        assert code == 0

    def test_paw_perfect_violation(self, write, capsys):
        code, out, _ = run(["verify", write("paw.col", PAW_COL), write("c", "0 0\n1 1\n2 2\n3 0\n"), "--mode", "perfect"], capsys)
        assert code == 11
        # with d colored like a, the path b-c-d is the one carrying 3 colors
        assert "{1,2,3}: 3 colors, clique number 2" in out

    def test_edge_proper_violation(self, write, capsys):
        code, out, _ = run(["verify", write("e.txt", "n 2\n0 1\n"), write("c", "0 0\n1 0\n")], capsys)
        assert code == 11 and "(0,1)" in out

    def test_improper_in_perfect_mode(self, write, capsys):
        code, _, _ = run(["verify", write("e.txt", "n 2\n0 1\n"), write("c", "0 0\n1 0\n"), "--mode", "perfect"], capsys)
        assert code == 11

    def test_oracle_scale(self, write, capsys):
        g = write("big.txt", "n 21\n0 1\n")
        c = write("c", "".join(f"{v} {int(v == 1)}\n" for v in range(21)))
        code, _, err = run(["verify", g, c, "--mode", "perfect"], capsys)
        assert code == 3 and "oracle scale exceeded" in err
        assert run(["verify", g, c], capsys)[0] == 0

    def test_bad_coloring_file(self, write, capsys):
        code, _, _ = run(["verify", write("c4.txt", C4), write("c", "0 0\n1 1\n")], capsys)
        assert code == 2


class TestGen:
    def test_octahedron(self, tmp_path, capsys):
        out = tmp_path / "g.txt"
        assert run(["gen", "cmp:2,2,2:seed=1", "--out", str(out)], capsys)[0] == 0
        g = parse_graph(out.read_text())
        assert (g.n, g.m) == (6, 12)

    def test_k33(self, capsys):
        code, out, _ = run(["gen", "bip:3x3:p=1.0:seed=1"], capsys)
        g = parse_graph(out)
        assert code == 0 and (g.n, g.m) == (6, 9)

    def test_pawed_rejected(self, tmp_path, capsys):
        out = tmp_path / "g.txt"
        run(["gen", "pawed:(bip:4x4:p=0.5):seed=7", "--out", str(out)], capsys)
        code, text, _ = run(["recognize", str(out)], capsys)
        assert code == 10 and "induced-paw" in text

    def test_bad_spec(self, capsys):
        code, _, err = run(["gen", "bogus:1"], capsys)
        assert code == 2 and "bad generator spec" in err

    def test_env_seed(self, monkeypatch, capsys):
        monkeypatch.setenv("PERFCOLOR_SEED", "5")
        _, a, _ = run(["gen", "gnp:30:p=0.3"], capsys)
        _, b, _ = run(["gen", "gnp:30:p=0.3:seed=5"], capsys)
        monkeypatch.setenv("PERFCOLOR_SEED", "6")
        _, c, _ = run(["gen", "gnp:30:p=0.3"], capsys)
        assert a == b != c


class TestBench:
    def test_single_size_trials(self, tmp_path, capsys):
        csv = tmp_path / "b.csv"
        code, out, _ = run(["bench", "--sizes", "20", "--trials", "3", "--csv", str(csv)], capsys)
        lines = csv.read_text().splitlines()
        assert code == 0 and lines[0] == "n,m,recognize_ns,color_ns,trial"
        rows = [line.split(",") for line in lines[1:]]
        assert len(rows) == 3 and len({(r[0], r[1]) for r in rows}) == 1
        assert [r[4] for r in rows] == ["0", "1", "2"]
        assert "slope" in out

    def test_empty_sizes(self, capsys):
        code, out, _ = run(["bench", "--sizes", ""], capsys)
        assert code == 0 and out == "n,m,recognize_ns,color_ns,trial\n"

    def test_negative_template(self, capsys):
        code, _, err = run(["bench", "--sizes", "5", "--spec-template", "pawed:(cmp:{n},{n})"], capsys)
        assert code == 2 and "not perfectly colorable" in err


class TestOracleCommand:
    @pytest.mark.parametrize(
        "query,text,expected",
        [
            ("clique", PAW_COL, "clique: 3"),
            ("chromatic", C5, "chromatic: 3"),
            ("perfect", PAW_COL, "perfect: true"),
            ("colorable", PAW_COL, "colorable: false"),
            ("paw", PAW_COL, "paw: induced-paw 0 1 2 3"),
            ("paw", C5, "paw: none"),
        ],
    )
    def test_queries(self, write, capsys, query, text, expected):
        name = "g.col" if text is PAW_COL else "g.txt"
        code, out, _ = run(["oracle", query, write(name, text)], capsys)
        assert code == 0 and out.strip() == expected

    def test_scale(self, write, capsys):
        code, _, _ = run(["oracle", "colorable", write("g.txt", "n 10\n")], capsys)
        assert code == 3


def test_module_entry_point(write):
    proc = subprocess.run([sys.executable, "-m", "perfcolor", "recognize", write("paw.col", PAW_COL)], capture_output=True, text=True)
    assert proc.returncode == 10 and "induced-paw 0 1 2 3" in proc.stdout
