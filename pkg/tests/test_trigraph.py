import io
import os

import numpy as np
import pytest

from trimoduli.bigpoly import Trinomial
from trimoduli.handling import graph_cache_path
from trimoduli.resolve import dyadically_resolve
from trimoduli.trigraph import (GraphFileError, TrinomialGraph, build_graph, cached_graph,
                                export_graph, gcd_scaling_check, graph_from_text, graph_stats,
                                graph_to_text, independent_class_check, load_graph,
                                path_or_independent, save_graph, structural_edge_check)


def test_smallest_graphs(graph_of):
    assert graph_of(2).edge_count == 0
    assert graph_of(2).edges() == []
    assert graph_of(3).edges() == [(1, 2)]
    g5 = graph_of(5)
    assert g5.edge_count == 6
    assert all(g5.degree(v) == 3 for v in g5.vertices)
    with pytest.raises(ValueError):
        build_graph(1)


def test_graph_validation():
    with pytest.raises(ValueError):
        TrinomialGraph(4, np.zeros((2, 2), dtype=bool))
    with pytest.raises(ValueError):
        TrinomialGraph(3, np.eye(2, dtype=bool))
    with pytest.raises(ValueError):
        TrinomialGraph(3, np.array([[0, 1], [0, 0]], dtype=bool))
    with pytest.raises(ValueError):
        TrinomialGraph(3, np.array([[0, 1], [1, 0]], dtype=bool)).has_edge(0, 1)


def test_edges_follow_resultants(graph_of):
    for n in range(3, 21):
        g = graph_of(n)
        for k in range(2, n):
            for j in range(1, k):
                verdict = dyadically_resolve(Trinomial(n, k), Trinomial(n, j))
                assert g.has_edge(j, k) == verdict.resolves
                assert g.has_edge(k, j) == verdict.resolves


@pytest.mark.slow
def test_build_methods_agree():
    for n in range(2, 41):
        assert build_graph(n, method="modular") == build_graph(n, method="subresultant")


@pytest.mark.slow
def test_structural_families(graph_of):
    for n in range(2, 201):
        assert structural_edge_check(graph_of(n)) == []


def test_structural_check_flags_missing_edges(graph_of):
    g = graph_of(12)
    dense = g.to_dense()
    dense[0, 1] = dense[1, 0] = False
    broken = TrinomialGraph(12, dense)
    families = {v.family for v in structural_edge_check(broken)}
    assert {"cardioid", "consecutive"} <= families


def test_gcd_scaling(graph_of):
    assert gcd_scaling_check(graph_of(40), graph_of(20))
    assert gcd_scaling_check(graph_of(40), graph_of(40))
    assert gcd_scaling_check(graph_of(100), graph_of(25))
    assert gcd_scaling_check(graph_of(36), graph_of(12))
    with pytest.raises(ValueError):
        gcd_scaling_check(graph_of(40), graph_of(30))


def test_class_shapes(graph_of):
    for n in range(3, 31):
        g = graph_of(n)
        for d in range(1, n):
            for i in range(1, d + 1):
                shape = path_or_independent(n, i, d)
                m = shape.members
                if shape.kind == "path":
                    assert all(g.has_edge(a, b) for a, b in zip(m, m[1:]))
                else:
                    assert not any(g.has_edge(a, b) for a in m for b in m if a < b)
    with pytest.raises(ValueError):
        path_or_independent(10, 4, 3)


@pytest.mark.slow
def test_independent_classes_odd(graph_of):
    for n in range(3, 151, 2):
        assert independent_class_check(graph_of(n)) == []


def test_independent_classes_even(graph_of):
    for n in (2, 4, 8, 12, 20, 40, 96):
        g = graph_of(n)
        core = graph_of(n >> (n & -n).bit_length() - 1) if n & (n - 1) else None
        assert independent_class_check(g, core=core) == []


def test_stats(graph_of):
    s3 = graph_stats(graph_of(3))
    assert (s3.edge_count, s3.pair_count, s3.coprime_count) == (1, 1, 1)
    assert s3.edge_density == 1
    s2 = graph_stats(graph_of(2))
    assert s2.pair_count == 0 and s2.edge_density == 0 and s2.coprime_density == 0
    for n in range(3, 40):
        s = graph_stats(graph_of(n))
        assert 0 <= s.edge_density <= s.coprime_density <= 1


def test_stats_recompute_coprime(graph_of):
    g = graph_of(30)
    bare = TrinomialGraph(30, g.to_dense())
    assert graph_stats(bare) == graph_stats(g)


@pytest.mark.slow
def test_density_gap_at_200(graph_of):
    s = graph_stats(graph_of(200))
    assert s.edge_density < s.coprime_density


def test_text_roundtrip(graph_of, tmp_path):
    g = graph_of(100)
    path = tmp_path / "T100.txt"
    save_graph(g, str(path))
    assert load_graph(str(path)) == g
    assert graph_from_text(graph_to_text(graph_of(2))) == graph_of(2)


def test_text_rejects_damage(graph_of):
    text = graph_to_text(graph_of(20))
    with pytest.raises(GraphFileError):
        graph_from_text(text[:-5])
    with pytest.raises(GraphFileError):
        graph_from_text(text.replace("TRIGRAPH 1", "TRIGRAPH 2", 1))
    lines = text.split("\n")
    lines[1] = lines[2]
    with pytest.raises(GraphFileError):
        graph_from_text("\n".join(lines))
    with pytest.raises(GraphFileError):
        graph_from_text("hello\n")


def test_exports(graph_of):
    assert export_graph(graph_of(3), "edge-list") == "1 2\n"
    dot = export_graph(graph_of(40), "dot")
    assert dot.startswith("graph T40 {")
    assert sum(1 for line in dot.splitlines() if line.strip().endswith(";")
               and "--" not in line) == 39
    csv = export_graph(graph_of(200), "adjacency-csv")
    table = np.loadtxt(io.StringIO(csv), delimiter=",", dtype=int)
    assert table.shape == (199, 199)
    assert (table == table.T).all() and not table.diagonal().any()
    with pytest.raises(ValueError):
        export_graph(graph_of(3), "graphml")


def test_cache(tmp_path, graph_of):
    cache = str(tmp_path)
    g = cached_graph(17, cache_dir=cache)
    path = graph_cache_path(cache, 17)
    assert os.path.exists(path)
    assert cached_graph(17, cache_dir=cache) == g == graph_of(17)
    with open(path, "w") as f:
        f.write("TRIGRAPH 1 n=17 edges=")
    assert cached_graph(17, cache_dir=cache) == g
    assert load_graph(path) == g


def test_cache_rejects_graph_of_other_n(tmp_path, graph_of):
    cache = str(tmp_path)
    path = graph_cache_path(cache, 17)
    save_graph(graph_of(16), path)
    g = cached_graph(17, cache_dir=cache)
    assert g.n == 17 and g == graph_of(17)
    assert load_graph(path).n == 17
