"""The graph T(n) of dyadically resolving trinomial pairs: build, check, persist, export."""

import io
import re
import zlib
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .bigpoly import Trinomial
from .handling import atomic_write_text, graph_cache_path, read_text
from .logger import ensure_logger
from .resolve import (is_signed_power_of_two, nu2, pair_verdict_table,
                      resultant_with_xd_minus_1)

FORMAT_VERSION = 1
EXPORT_FORMATS = ("dot", "edge-list", "adjacency-csv")

_HEADER = re.compile(r"^TRIGRAPH (\d+) n=(\d+) edges=(\d+)$")
_TRAILER = re.compile(r"^CRC32=([0-9a-f]{8})$")


class GraphFileError(ValueError):
    pass


class TrinomialGraph(object):
    """Immutable T(n) over vertices 1..n-1, adjacency bit-packed row by row."""

    def __init__(self, n, adjacency, coprime_count=None):
        adjacency = np.asarray(adjacency, dtype=bool)
        size = n - 1
        if adjacency.shape != (size, size):
            raise ValueError(f"adjacency must be {size}x{size}, got {adjacency.shape}")
        if adjacency.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if not np.array_equal(adjacency, adjacency.T):
            raise ValueError("adjacency must be symmetric")
        self.n = n
        self._packed = np.packbits(adjacency, axis=1)
        self._packed.setflags(write=False)
        self.edge_count = int(adjacency.sum()) // 2
        self.coprime_count = coprime_count
        self._masks = None

    @property
    def vertices(self):
        return range(1, self.n)

    def to_dense(self):
        size = self.n - 1
        if size == 0:
            return np.zeros((0, 0), dtype=bool)
        return np.unpackbits(self._packed, axis=1, count=size).astype(bool)

    def _check_vertex(self, v):
        if not 1 <= v < self.n:
            raise ValueError(f"vertex {v} outside 1..{self.n - 1}")

    def has_edge(self, i, j):
        self._check_vertex(i)
        self._check_vertex(j)
        a, b = i - 1, j - 1
        return bool((self._packed[a, b >> 3] >> (7 - (b & 7))) & 1)

    def neighbors(self, v):
        self._check_vertex(v)
        row = np.unpackbits(self._packed[v - 1], count=self.n - 1)
        return tuple(int(x) + 1 for x in np.flatnonzero(row))

    def degree(self, v):
        return len(self.neighbors(v))

    def edges(self):
        """Edges (i, j), i < j, in lexicographic order."""
        dense = self.to_dense()
        rows, cols = np.nonzero(np.triu(dense, k=1))
        return [(int(i) + 1, int(j) + 1) for i, j in zip(rows, cols)]

    def induced(self, vertices):
        """Dense adjacency of the subgraph induced by `vertices`, in the given order."""
        idx = [v - 1 for v in vertices]
        for v in vertices:
            self._check_vertex(v)
        return self.to_dense()[np.ix_(idx, idx)]

    def neighbor_masks(self):
        """Python-int bitsets, bit v set in masks[u] iff {u, v} is an edge (index 0 unused)."""
        if self._masks is None:
            masks = [0] * self.n
            for i, j in self.edges():
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            self._masks = masks
        return self._masks

    def __eq__(self, other):
        if not isinstance(other, TrinomialGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._packed, other._packed)

    def __hash__(self):
        return hash((self.n, self._packed.tobytes()))

    def __repr__(self):
        return f"TrinomialGraph(n={self.n}, edges={self.edge_count})"


def build_graph(n, method="modular", logger=None):
    """Build T(n) from exact pair verdicts."""
    if n < 2:
        raise ValueError(f"T(n) needs n >= 2, got {n}")
    logger = ensure_logger(logger)
    logger.log_start(f"T({n}) construction")
    coprime, resolves = pair_verdict_table(n, method=method)
    coprime_count = int(np.triu(coprime, k=1).sum())
    g = TrinomialGraph(n, resolves, coprime_count=coprime_count)
    logger.log_end(f"T({n}) construction", f"edges = {g.edge_count}")
    return g


Violation = namedtuple("Violation", ["family", "i", "j"])


def _circle_pairs(n):
    for k in range(1, n // 2 + 1):
        yield n // 2 + k + n % 2, 2 * k + n % 2


def structural_edge_check(g):
    """Return violations of the always-present edge families and of reflection symmetry.

    Families: cardioid {k, 2k}, consecutive {k, k+1}, circle
    {floor(n/2) + k + n mod 2, 2k + n mod 2}, and {j, k} whenever k - j divides k.
    Endpoints outside 1..n-1 or coinciding are skipped.
    """
    n = g.n
    violations = []

    def expect(family, i, j):
        if not (1 <= i < n and 1 <= j < n) or i == j:
            return
        if not g.has_edge(i, j):
            violations.append(Violation(family, min(i, j), max(i, j)))

    for k in range(1, n):
        expect("cardioid", k, 2 * k)
        expect("consecutive", k, k + 1)
    for a, b in _circle_pairs(n):
        expect("circle", a, b)
    for k in range(2, n):
        for j in range(1, k):
            if k % (k - j) == 0:
                expect("divisor", j, k)
    for i, j in g.edges():
        if not g.has_edge(n - i, n - j):
            violations.append(Violation("reflection", i, j))
    return violations


def gcd_scaling_check(g, g_small):
    """{k, j} in T(n) iff {k/d, j/d} in T(n/d) for every pair with d | k and d | j.

    Here d = g.n / g_small.n.
    """
    if g_small.n < 2 or g.n % g_small.n:
        raise ValueError(f"{g_small.n} does not divide {g.n}")
    d = g.n // g_small.n
    for k in range(2 * d, g.n, d):
        for j in range(d, k, d):
            if g.has_edge(j, k) != g_small.has_edge(j // d, k // d):
                return False
    return True


ClassShape = namedtuple("ClassShape", ["kind", "members"])


def path_or_independent(n, i, d):
    """Shape of the class {i, i+d, i+2d, ...} in T(n): a path or an independent set."""
    if not 1 <= i <= d < n:
        raise ValueError(f"need 1 <= i <= d < n, got i={i}, d={d}, n={n}")
    members = tuple(range(i, n, d))
    value = resultant_with_xd_minus_1(Trinomial(n, i), d)
    kind = "path" if is_signed_power_of_two(value) else "independent"
    return ClassShape(kind, members)


def _internal_edges(g, members):
    out = []
    for a, u in enumerate(members):
        for v in members[a + 1:]:
            if g.has_edge(u, v):
                out.append((u, v))
    return out


def independent_class_check(g, core=None):
    """Check the congruence classes that must be independent in T(n).

    For odd n, every class mod 2^j other than 0 and n mod 2^j. For n = 2^v n1, the
    classes 2^(i-1) mod 2^i for i <= v, and the multiples of 2^v induce T(n1)
    (`core`, built on demand).
    """
    n = g.n
    violations = []
    v = nu2(n)
    n1 = n >> v
    if v == 0:
        M = 2
        while M // 2 < n:
            for r in range(M):
                if r in (0, n % M):
                    continue
                for e in _internal_edges(g, list(range(r, n, M))):
                    violations.append(Violation(f"class {r} mod {M}", *e))
            M *= 2
        return violations
    for i in range(1, v + 1):
        r, M = 1 << (i - 1), 1 << i
        for e in _internal_edges(g, list(range(r, n, M))):
            violations.append(Violation(f"class {r} mod {M}", *e))
    if n1 > 1:
        if core is None:
            core = build_graph(n1)
        if core.n != n1:
            raise ValueError(f"core graph must be T({n1}), got T({core.n})")
        sub = g.induced([m << v for m in range(1, n1)])
        if not np.array_equal(sub, core.to_dense()):
            violations.append(Violation(f"multiples of {1 << v}", 0, 0))
    return violations


@dataclass(frozen=True)
class GraphStats:
    n: int
    edge_count: int
    pair_count: int
    coprime_count: int
    edge_density: Fraction
    coprime_density: Fraction


def graph_stats(g):
    """Exact edge and coprime densities over the C(n-1, 2) pairs (0 when there are none)."""
    pairs = comb(g.n - 1, 2)
    coprime = g.coprime_count
    if coprime is None:
        table, _ = pair_verdict_table(g.n)
        coprime = int(np.triu(table, k=1).sum())
    if pairs == 0:
        return GraphStats(g.n, 0, 0, 0, Fraction(0), Fraction(0))
    return GraphStats(g.n, g.edge_count, pairs, coprime,
                      Fraction(g.edge_count, pairs), Fraction(coprime, pairs))


def graph_to_text(g):
    lines = [f"TRIGRAPH {FORMAT_VERSION} n={g.n} edges={g.edge_count}"]
    lines += [f"{i} {j}" for i, j in g.edges()]
    body = "".join(line + "\n" for line in lines)
    return body + f"CRC32={zlib.crc32(body.encode('utf-8')):08x}\n"


def graph_from_text(text):
    if not text.endswith("\n"):
        raise GraphFileError("truncated graph file")
    lines = text[:-1].split("\n")
    if not lines or not lines[0].startswith("TRIGRAPH "):
        raise GraphFileError("missing TRIGRAPH header")
    head = _HEADER.match(lines[0])
    if head is None:
        raise GraphFileError(f"malformed header {lines[0]!r}")
    version, n, m = (int(x) for x in head.groups())
    if version != FORMAT_VERSION:
        raise GraphFileError(f"unsupported format version {version}")
    if n < 2:
        raise GraphFileError(f"invalid n={n}")
    tail = _TRAILER.match(lines[-1]) if len(lines) > 1 else None
    if tail is None:
        raise GraphFileError("missing CRC32 trailer")
    body = "".join(line + "\n" for line in lines[:-1])
    if int(tail.group(1), 16) != zlib.crc32(body.encode("utf-8")):
        raise GraphFileError("checksum mismatch")
    edge_lines = lines[1:-1]
    if len(edge_lines) != m:
        raise GraphFileError(f"header announces {m} edges, found {len(edge_lines)}")
    adjacency = np.zeros((n - 1, n - 1), dtype=bool)
    prev = (0, 0)
    for line in edge_lines:
        parts = line.split(" ")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphFileError(f"malformed edge line {line!r}")
        i, j = int(parts[0]), int(parts[1])
        if not 1 <= i < j < n:
            raise GraphFileError(f"edge {line!r} out of range")
        if (i, j) <= prev:
            raise GraphFileError("edges are not in lexicographic order")
        prev = (i, j)
        adjacency[i - 1, j - 1] = adjacency[j - 1, i - 1] = True
    return TrinomialGraph(n, adjacency)


def save_graph(g, path):
    atomic_write_text(path, graph_to_text(g))


def load_graph(path):
    try:
        text = read_text(path)
    except UnicodeDecodeError as e:
        raise GraphFileError(f"{path}: not UTF-8 text") from e
    return graph_from_text(text)


def export_graph(g, fmt):
    """Render T(n) as DOT, an edge list or a 0/1 adjacency CSV."""
    if fmt == "edge-list":
        return "".join(f"{i} {j}\n" for i, j in g.edges())
    if fmt == "dot":
        out = [f"graph T{g.n} {{"]
        out += [f"  {v};" for v in g.vertices]
        out += [f"  {i} -- {j};" for i, j in g.edges()]
        return "\n".join(out) + "\n}\n"
    if fmt == "adjacency-csv":
        buf = io.StringIO()
        np.savetxt(buf, g.to_dense().astype(np.int8), fmt="%d", delimiter=",", newline="\n")
        return buf.getvalue()
    raise ValueError(f"unknown export format {fmt!r}, expected one of {', '.join(EXPORT_FORMATS)}")


def cached_graph(n, cache_dir=None, method="modular", use_cache=True, logger=None):
    """Load T(n) from the cache, building and storing it on a miss."""
    if cache_dir is None or not use_cache:
        g = build_graph(n, method=method, logger=logger)
        if cache_dir is not None:
            save_graph(g, graph_cache_path(cache_dir, n))
        return g
    path = graph_cache_path(cache_dir, n)
    try:
        g = load_graph(path)
        if g.n != n:
            raise GraphFileError(f"{path} holds T({g.n})")
        return g
    except FileNotFoundError:
        pass
    except GraphFileError as e:
        ensure_logger(logger).log(f"Discarding cached T({n}): {e}")
    g = build_graph(n, method=method, logger=logger)
    save_graph(g, path)
    return g
