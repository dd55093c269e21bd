import io

import pytest

from cyclemod4.cli import run
from cyclemod4.graph_core import is_euler, parse_graph6
from cyclemod4.report import Section, render


def run_out(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k5_file(tmp_path):
    p = tmp_path / "k5.g6"
    p.write_text("D~{\n")
    return str(p)


def test_render_empty_section_is_header_only():
    assert render([Section("x", ("a", "b"))]) == "a\tb\n"


def test_render_sorted_and_stable():
    s = Section("census", ("p", "tag", "count"), sort_key=lambda r: (r[0], r[1]))
    s.add(6, "quad", 4)
    s.add(5, "triple(0,1,3)", 1)
    s.add(5, "pair(0,3)", 1)
    text = render([s, Section("other", ("z",))])
    assert text == ("# census\np\ttag\tcount\n5\tpair(0,3)\t1\n5\ttriple(0,1,3)\t1\n6\tquad\t4\n"
                    "\n# other\nz\n")
    assert "\r" not in text


def test_render_rejects_bad_rows():
    s = Section("x", ("a",))
    with pytest.raises(ValueError):
        s.add(1, 2)
    s.add("a\tb")
    with pytest.raises(ValueError):
        render([s])


def test_classify(capsys, k5_file):
    code, out, _ = run_out(capsys, "classify", "--in", k5_file)
    assert code == 0 and out == "triple(0,1,3)\tlengths=3,4,5\n"


def test_classify_edge_list_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("3 3\n0 1\n0 2\n1 2\n"))
    code, out, _ = run_out(capsys, "classify")
    assert code == 0 and out == "single(3)\tlengths=3\n"


def test_cases_table_shape_a_012(capsys):
    code, out, _ = run_out(capsys, "cases", "table", "--shape", "a", "--family", "012")
    assert code == 0
    assert out == "i\tj\tk\tl\tcc_ij\tcc_ik\tcc_jk\n# no feasible configuration\n"


def test_cases_table_cc(capsys):
    code, out, _ = run_out(capsys, "cases", "table", "--family", "012")
    lines = out.splitlines()
    assert lines[0] == "t1\tt2\teven\todd\teven_escapes\todd_escapes"
    assert "0\t1\t1\t3\tfalse\ttrue" in lines
    assert len(lines) == 7


def test_cases_table_shape_b(capsys):
    code, out, _ = run_out(capsys, "cases", "table", "--shape", "b", "--family", "012")
    assert out.splitlines()[1:] == ["0\t1\t2\te\td\t1\t0\t1", "1\t2\t0\td\te\t1\t1\t2"]


def test_cases_divide_and_explore(capsys):
    code, out, _ = run_out(capsys, "cases", "divide", "--family", "012", "--type", "1")
    assert code == 0 and len(out.splitlines()) == 5
    code, out, _ = run_out(capsys, "cases", "explore", "--family", "123", "--shape", "a", "--divide", "1")
    rows = out.splitlines()[1:]
    assert len(rows) == 6 and sum("\tcontinue\t" in r for r in rows) == 2


def test_cases_witness(capsys):
    code, out, _ = run_out(capsys, "cases", "witness", "--family", "013", "--shape", "a", "--max-order", "6")
    assert code == 0
    assert out.splitlines()[1].startswith("013\tA:0,1,3;e\t")
    assert out.rstrip().endswith("true")


def test_decompose_and_spectrum(capsys, k5_file):
    code, out, _ = run_out(capsys, "decompose", "--in", k5_file)
    assert code == 0 and "# summary" in out and "nongraceful_by_RG" in out
    code, out, _ = run_out(capsys, "spectrum", "--in", k5_file)
    assert "3\t3\n4\t0\n5\t1\n" in out


def test_graceful_search_and_verify(capsys, tmp_path):
    g = tmp_path / "g.g6"
    g.write_text("E@vg\n")
    code, out, _ = run_out(capsys, "graceful", "search", "--in", str(g))
    assert code == 0 and out.startswith("status=found")
    labels = tmp_path / "l.txt"
    labels.write_text("".join(out.splitlines(keepends=True)[1:]))
    code, out, _ = run_out(capsys, "graceful", "verify", "--in", str(g), "--labels", str(labels))
    assert out == "graceful\n"
    labels.write_text("0:0\n1:1\n")
    code, out, err = run_out(capsys, "graceful", "verify", "--in", str(g), "--labels", str(labels))
    assert code == 1 and err.startswith("error\tMissingLabel\t") and err.count("\n") == 1


def test_atlas_commands(capsys):
    code, out, _ = run_out(capsys, "atlas", "enumerate", "--max-order", "5")
    lines = out.split()
    assert len(lines) == 1 + 1 + 4
    assert all(is_euler(parse_graph6(x)) for x in lines)
    code, out, _ = run_out(capsys, "atlas", "min-order", "--family", "012", "--max-order", "8")
    assert out.splitlines()[1] == "012\t8\t8\t10\tG?Ce^_"
    code, out, _ = run_out(capsys, "atlas", "audit", "--family", "012", "--max-order", "8")
    assert "012\t7\t8\t1\tconsistent\t" in out


def test_domain_error_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("Zzz\n")
    code, out, err = run_out(capsys, "classify", "--in", str(bad))
    assert code == 1 and out == "" and err.startswith("error\tMalformedGraph6\t")
    code, out, err = run_out(capsys, "atlas", "census", "--max-order", "12")
    assert code == 1 and "OrderTooLarge" in err
    code, out, err = run_out(capsys, "cases", "divide", "--family", "013", "--type", "2")
    assert code == 1 and "TypeNotInFamily" in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["classify", "--bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["cases", "table", "--family", "999"])
    assert exc.value.code == 2


def test_out_flag_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.tsv", tmp_path / "b.tsv"
    for path in (a, b):
        assert run(["atlas", "census", "--max-order", "7", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()
    c = tmp_path / "c.tsv"
    for path in (a, c):
        run(["cases", "explore", "--family", "012", "--shape", "b", "--depth", "2", "--out", str(path)])
    assert a.read_bytes() == c.read_bytes()
