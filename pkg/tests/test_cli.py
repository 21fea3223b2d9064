import pytest

from trimoduli.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main


@pytest.fixture
def run(tmp_path, capsys):
    cache = str(tmp_path / "cache")

    def _run(*argv):
        code = main(["--quiet", "--cache-dir", cache] + list(argv))
        return code, capsys.readouterr().out
    return _run


def test_graph_edge_list(run):
    assert run("graph", "--n", "3") == (EXIT_OK, "1 2\n")
    code, out = run("graph", "--n", "40", "--format", "dot")
    assert code == EXIT_OK and out.startswith("graph T40 {")


def test_graph_usage_errors(run):
    assert run("graph", "--n", "1")[0] == EXIT_USAGE
    assert run("graph", "--n", "400")[0] == EXIT_USAGE
    assert run("graph")[0] == EXIT_USAGE
    assert run("nosuchcommand")[0] == EXIT_USAGE


def test_graph_to_file(run, tmp_path):
    out = tmp_path / "T12.txt"
    assert run("graph", "--n", "12", "--format", "trigraph", "--out", str(out))[0] == EXIT_OK
    assert out.read_text().startswith("TRIGRAPH 1 n=12 ")


def test_clique(run):
    code, out = run("clique", "--n", "10")
    assert code == EXIT_OK
    assert out.startswith("n=10 size=5 members=")
    code, out = run("clique", "--n", "5", "--all")
    assert out == "n=5 size=4 members=1,2,3,4\n"


def test_clique_table(run):
    code, out = run("clique", "--range", "2..41", "--table")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "k,a(k),witness"
    table = {int(k): int(a) for k, a, _ in (line.split(",") for line in lines[1:])}
    assert table == {2: 3, 3: 5, 4: 5, 5: 10, 6: 11, 7: 22, 8: 41}


def test_clique_table_needs_full_range(run):
    assert run("clique", "--range", "10..20", "--table")[0] == EXIT_USAGE
    code, out = run("clique", "--range", "3..10", "--table")
    assert code == EXIT_OK
    rows = [line.split(",")[:2] for line in out.splitlines()[1:]]
    assert rows == [["2", "3"], ["3", "5"], ["4", "5"], ["5", "10"]]


def test_color(run):
    code, out = run("color", "--n", "16")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "n=16 colors=4"


def test_moduli_and_verify(run, tmp_path):
    path = str(tmp_path / "moduli.txt")
    assert run("moduli", "--n", "20", "--members", "12,4", "--c", "3", "--out", path)[0] == EXIT_OK
    assert run("verify", "--system", path) == (EXIT_OK, "OK\n")
    with open(path) as f:
        text = f.read()
    with open(path, "w") as f:
        f.write(text.replace("c=3", "c=4"))
    assert run("verify", "--system", path)[0] == EXIT_FAILED


def test_moduli_rejects_non_clique(run):
    assert run("moduli", "--n", "10", "--members", "1,2,3,4,5,6", "--c", "1")[0] == EXIT_USAGE


def test_verify_clique(run):
    spec = "n=781,members=720,760,765,768,780"
    assert run("verify", "--clique", spec) == (EXIT_OK, "OK\n")
    assert run("verify", "--clique", "n=10,members=1,2,3,4,5,6")[0] == EXIT_FAILED
    assert run("verify", "--clique", "n=10,members=12")[0] == EXIT_USAGE


def test_inverse_certificate(run, tmp_path):
    path = tmp_path / "cert.txt"
    assert run("inverse", "--n", "20", "--k", "12", "--j", "4", "--out", str(path))[0] == EXIT_OK
    assert run("verify", "--scalable", str(path))[0] == EXIT_OK
    path.write_text(path.read_text().replace("a=1/1", "a=5/1", 1))
    assert run("verify", "--scalable", str(path))[0] == EXIT_FAILED


def test_inverse_not_scalable(run):
    assert run("inverse", "--n", "20", "--k", "4", "--j", "4")[0] == EXIT_USAGE


def test_stats(run):
    code, out = run("stats", "--range", "3..12")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "n,edge_count,pair_count,coprime_count,edge_density,coprime_density"
    assert len(lines) == 11
    assert lines[1] == "3,1,1,1,1/1,1/1"
    code, out = run("stats", "--range", "5..4")
    assert code == EXIT_OK and out.splitlines() == [lines[0]]


def test_seq(run):
    code, out = run("seq", "--steps", "4")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[3] == "n=19 members=12,15,16,18 verified=yes by=resultants"
    assert all(line.endswith("verified=yes by=resultants") or "by=divisibility" in line
               for line in lines)


def test_bench(run, tmp_path):
    out = tmp_path / "bench.yaml"
    args = ("bench", "--n", "5", "--members", "1,2,3,4", "--c", "2", "--values", "50",
            "--out", str(out))
    assert run(*args)[0] == EXIT_OK
    assert "timings_ns:" in out.read_text()
    code, text = run("bench", "--n", "5", "--members", "1,2,3,4", "--c", "2",
                     "--values", "5", "--bits", "100000")
    assert code == EXIT_OK and "bit_size: 100000" not in text


def test_config(run, tmp_path):
    good = tmp_path / "good.yaml"
    good.write_text("n_max_unbudgeted: 20\n")
    assert run("--config", str(good), "graph", "--n", "30")[0] == EXIT_USAGE
    bad = tmp_path / "bad.yaml"
    bad.write_text("no_such_key: 1\n")
    assert run("--config", str(bad), "graph", "--n", "3")[0] == EXIT_USAGE
