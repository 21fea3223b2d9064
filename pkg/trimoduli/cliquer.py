"""Maximum cliques of T(n), the a(k) scan, divisibility-sequence cliques and the coloring bound."""

import re
from dataclasses import dataclass, field
from itertools import combinations
from math import lcm

from .bigpoly import Trinomial
from .logger import ensure_logger
from .resolve import dyadically_resolve, nu2
from .trigraph import build_graph


class ColoringError(RuntimeError):
    pass


_RECORD = re.compile(r"^n=(\d+) size=(\d+) members=([\d,]+)$")


@dataclass(frozen=True)
class Clique:
    n: int
    members: tuple

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        if not members:
            raise ValueError("a clique needs at least one member")
        if any(b <= a for a, b in zip(members, members[1:])):
            raise ValueError(f"members must be strictly increasing: {members}")
        if members[0] < 1 or members[-1] >= self.n:
            raise ValueError(f"members must lie in 1..{self.n - 1}")

    @property
    def size(self):
        return len(self.members)

    def to_record(self):
        return f"n={self.n} size={self.size} members={','.join(map(str, self.members))}"

    @classmethod
    def from_record(cls, line):
        m = _RECORD.match(line.strip())
        if m is None:
            raise ValueError(f"malformed clique record {line!r}")
        n, size, members = int(m.group(1)), int(m.group(2)), m.group(3)
        clique = cls(n, tuple(int(x) for x in members.split(",")))
        if clique.size != size:
            raise ValueError(f"record announces size {size}, lists {clique.size}")
        return clique


@dataclass(frozen=True)
class Coloring:
    n: int
    color_of: dict = field(hash=False)
    num_colors: int

    def classes(self):
        out = {}
        for v in sorted(self.color_of):
            out.setdefault(self.color_of[v], []).append(v)
        return [tuple(out[c]) for c in sorted(out)]

    def to_text(self):
        lines = [f"n={self.n} colors={self.num_colors}"]
        lines += [f"{v} {self.color_of[v]}" for v in sorted(self.color_of)]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DivisibilitySequence:
    """k_1 < ... < k_m with (k_i - k_j) | k_i for all i != j."""
    members: tuple

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        if not members or members[0] < 1:
            raise ValueError("members must be positive integers")
        if any(b <= a for a, b in zip(members, members[1:])):
            raise ValueError(f"members must be strictly increasing: {members}")
        for a, b in combinations(members, 2):
            if a % (b - a) or b % (b - a):
                raise ValueError(f"{b} - {a} does not divide both {a} and {b}")


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _degeneracy_order(masks, vertices):
    """Vertices in smallest-last order."""
    remaining = set(vertices)
    deg = {v: (masks[v]).bit_count() for v in vertices}
    order = []
    while remaining:
        v = min(remaining, key=lambda u: (deg[u], u))
        order.append(v)
        remaining.discard(v)
        for u in _bits(masks[v]):
            if u in remaining:
                deg[u] -= 1
    return order


class _MaxCliqueSearch(object):
    """Bron-Kerbosch with pivoting over Python-int bitsets, keeping maximum cliques only."""

    def __init__(self, masks, collect_all):
        self.masks = masks
        self.collect_all = collect_all
        self.best = 0
        self.found = []

    def _report(self, R):
        if len(R) > self.best:
            self.best = len(R)
            self.found = [tuple(sorted(R))]
        elif len(R) == self.best and self.collect_all:
            self.found.append(tuple(sorted(R)))

    def _too_small(self, size):
        return size < self.best if self.collect_all else size <= self.best

    def expand(self, R, P, X):
        if not P:
            if not X:
                self._report(R)
            return
        if self._too_small(len(R) + P.bit_count()):
            return
        masks = self.masks
        pivot = max(_bits(P | X), key=lambda u: (P & masks[u]).bit_count())
        for v in list(_bits(P & ~masks[pivot])):
            bit = 1 << v
            R.append(v)
            self.expand(R, P & masks[v], X & masks[v])
            R.pop()
            P &= ~bit
            X |= bit
            if self._too_small(len(R) + P.bit_count()):
                return

    def run(self, vertices):
        masks = self.masks
        order = _degeneracy_order(masks, vertices)
        later = 0
        for v in order:
            later |= 1 << v
        earlier = 0
        for v in order:
            later &= ~(1 << v)
            self.expand([v], masks[v] & later, masks[v] & earlier)
            earlier |= 1 << v
        return self.best, sorted(self.found)


def max_cliques(g):
    """Return (omega, cliques) with every maximum clique of T(n) as a sorted Clique list."""
    if g.n == 2:
        return 1, [Clique(2, (1,))]
    search = _MaxCliqueSearch(g.neighbor_masks(), collect_all=True)
    omega, found = search.run(list(g.vertices))
    return omega, [Clique(g.n, members) for members in found]


def clique_number(g):
    """omega(T(n)) with one witness clique."""
    if g.n == 2:
        return 1, Clique(2, (1,))
    search = _MaxCliqueSearch(g.neighbor_masks(), collect_all=False)
    omega, found = search.run(list(g.vertices))
    return omega, Clique(g.n, found[0])


def verify_clique(n, members):
    """Pairwise resultant check, without building T(n)."""
    members = sorted(set(members))
    for v in members:
        if not 1 <= v < n:
            raise ValueError(f"member {v} outside 1..{n - 1}")
    for j, k in combinations(members, 2):
        if not dyadically_resolve(Trinomial(n, k), Trinomial(n, j)).resolves:
            return False
    return True


def a_of_k_scan(k_max, n_ceiling, graph_of=None, logger=None):
    """Least n <= n_ceiling with omega(T(n)) >= k, for k = 2..k_max (None when not found).

    Returns (table, witnesses) where witnesses[k] is a Clique of size k in T(a(k)).
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    graph_of = graph_of or build_graph
    logger = ensure_logger(logger)
    table = {k: None for k in range(2, k_max + 1)}
    witnesses = {}
    logger.log_start(f"a(k) scan up to k={k_max}")
    for n in logger.progress(range(3, n_ceiling + 1), desc="a(k)"):
        omega, witness = clique_number(graph_of(n))
        logger.log_step(n, omega=omega)
        for k in range(2, min(omega, k_max) + 1):
            if table[k] is None:
                table[k] = n
                witnesses[k] = Clique(n, witness.members[:k])
        if all(v is not None for v in table.values()):
            break
    logger.log_end(f"a(k) scan up to k={k_max}")
    return table, witnesses


def grow_divisibility_sequence(seq):
    """Prepend k = lcm(seq) and replace each k_i by (k / k_i)(k_i + 1)."""
    if not isinstance(seq, DivisibilitySequence):
        seq = DivisibilitySequence(tuple(seq))
    k = lcm(*seq.members)
    return DivisibilitySequence(tuple(sorted((k,) + tuple(k // ki * (ki + 1)
                                                          for ki in seq.members))))


def divisibility_sequences(steps, start=(1,)):
    seq = DivisibilitySequence(tuple(start))
    out = [seq]
    for _ in range(steps):
        seq = grow_divisibility_sequence(seq)
        out.append(seq)
    return out


def sequence_is_clique(seq, n):
    """A divisibility sequence is a clique of T(n) for every n above its largest member."""
    if not isinstance(seq, DivisibilitySequence):
        seq = DivisibilitySequence(tuple(seq))
    if n <= seq.members[-1]:
        raise ValueError(f"n={n} must exceed the largest member {seq.members[-1]}")
    return all(k % (k - j) == 0 for j, k in combinations(seq.members, 2))


def upper_bound(n):
    """2 floor(log2 n) - nu2(n)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return 2 * (n.bit_length() - 1) - nu2(n)


def _odd_core_classes(n1):
    """Colour classes of T(n1), n1 odd, as residues (r, M) from the mod-4, mod-8, ... refinement."""
    out = []
    remaining = [0, 1]  # classes mod 2: 0 and n1 mod 2
    M = 4
    while M // 2 < n1:
        split = sorted({r + t for r in remaining for t in (0, M // 2)})
        keep = {0, n1 % M}
        out += [(r, M) for r in split if r not in keep]
        remaining = sorted(r for r in split if r in keep)
        M *= 2
    return out


def construct_coloring(n, graph=None):
    """Proper coloring of T(n) with at most upper_bound(n) colors, verified against the graph."""
    if n < 2:
        raise ValueError("n must be at least 2")
    v = nu2(n)
    n1 = n >> v
    color_of = {}
    for i in range(1, v + 1):
        for k in range(1 << (i - 1), n, 1 << i):
            color_of[k] = i - 1
    for c, (r, M) in enumerate(_odd_core_classes(n1), start=v):
        for m in range(r, n1, M):
            if m > 0:
                color_of[m << v] = c
    if len(color_of) != n - 1:
        missing = sorted(set(range(1, n)) - set(color_of))
        raise ColoringError(f"T({n}): vertices {missing[:10]} left uncolored")
    # renumber to the nonempty classes
    used = {c: i for i, c in enumerate(sorted(set(color_of.values())))}
    coloring = Coloring(n, {k: used[c] for k, c in color_of.items()}, len(used))

    g = graph if graph is not None else build_graph(n)
    if g.n != n:
        raise ValueError(f"graph is T({g.n}), expected T({n})")
    for i, j in g.edges():
        if coloring.color_of[i] == coloring.color_of[j]:
            raise ColoringError(f"T({n}): edge {{{i}, {j}}} inside color "
                                f"{coloring.color_of[i]}")
    if coloring.num_colors > upper_bound(n):
        raise ColoringError(f"T({n}): {coloring.num_colors} colors exceed the bound "
                            f"{upper_bound(n)}")
    return coloring
