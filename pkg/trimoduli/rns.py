"""Residue number system over a clique of trinomial moduli 2^(cn) - 2^(ck_i) + 1."""

import re
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

import numpy as np

from .bigpoly import Trinomial
from .cliquer import Clique, verify_clique
from .cofactor import scalable_inverse_pair, verify_scalability
from .handling import atomic_write_text, read_text
from .logger import ensure_logger

OPS = ("add", "sub", "mul")


class ModulusSystemError(ValueError):
    pass


@dataclass(frozen=True)
class ModulusSystem:
    n: int
    c: int
    members: tuple
    moduli: tuple
    capacity: int
    # inverse_table[i][j] = m_i^-1 mod m_j, None on the diagonal
    inverse_table: tuple
    provenance: tuple
    thresholds: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def shifts(self):
        return tuple((self.c * self.n, self.c * k) for k in self.members)

    def __len__(self):
        return len(self.moduli)


@dataclass(frozen=True)
class ResidueVector:
    system: ModulusSystem = field(repr=False)
    residues: tuple

    def __post_init__(self):
        if len(self.residues) != len(self.system.moduli):
            raise ModulusSystemError("residue count does not match the system")
        for r, m in zip(self.residues, self.system.moduli):
            if not 0 <= r < m:
                raise ModulusSystemError(f"residue {r} outside [0, {m})")


def _entry(pair, forward, c, m_from, m_to):
    """Inverse of m_from mod m_to from the scalable polynomial at 2^c, or by Euclid."""
    poly = pair.a if forward else pair.b
    value = poly(Fraction(1 << c))
    if value.denominator == 1:
        inv = value.numerator % m_to
        if m_from * inv % m_to == 1:
            return inv, "scalable"
    return pow(m_from, -1, m_to), "euclid"


def build_system(clique, c, scale_range=range(1, 9), logger=None):
    """Moduli, capacity and verified inverse table for a certified clique at scale c."""
    if c < 1:
        raise ModulusSystemError(f"scale c must be positive, got {c}")
    logger = ensure_logger(logger)
    n, members = clique.n, tuple(clique.members)
    if not verify_clique(n, members):
        raise ModulusSystemError(f"{members} is not a clique of T({n})")
    moduli = tuple(Trinomial(n, k).modulus(c) for k in members)
    for (i, mi), (j, mj) in combinations(enumerate(moduli), 2):
        if gcd(mi, mj) != 1:
            raise ModulusSystemError(f"moduli {i} and {j} share the factor {gcd(mi, mj)} at c={c}")
    L = len(moduli)
    table = [[None] * L for _ in range(L)]
    prov = [[None] * L for _ in range(L)]
    thresholds = {}
    for i, j in combinations(range(L), 2):
        pair = scalable_inverse_pair(n, members[i], members[j])
        table[i][j], prov[i][j] = _entry(pair, True, c, moduli[i], moduli[j])
        table[j][i], prov[j][i] = _entry(pair, False, c, moduli[j], moduli[i])
        if scale_range:
            thresholds[(members[i], members[j])] = verify_scalability(pair, scale_range).threshold
    for i, j in ((i, j) for i in range(L) for j in range(L) if i != j):
        if moduli[i] * table[i][j] % moduli[j] != 1:
            raise ModulusSystemError(f"inverse of modulus {i} mod modulus {j} fails")
    capacity = 1
    for m in moduli:
        capacity *= m
    logger.log(f"Built {L} moduli at n={n}, c={c}: "
               f"{sum(p == 'euclid' for row in prov for p in row)} Euclid fallbacks")
    return ModulusSystem(n, c, members, moduli, capacity,
                         tuple(map(tuple, table)), tuple(map(tuple, prov)), thresholds)


def fold_reduce(x, N, K):
    """x mod 2^N - 2^K + 1 by folding the high part through 2^N = 2^K - 1."""
    while x >> N:
        hi = x >> N
        x = (x & ((1 << N) - 1)) + (hi << K) - hi
    m = (1 << N) - (1 << K) + 1
    return x - m if x >= m else x


def reduce(x, system):
    if x < 0:
        raise ValueError("reduce expects a nonnegative integer")
    return ResidueVector(system, tuple(fold_reduce(x, N, K) for N, K in system.shifts))


def residue_op(u, v, op):
    if u.system is not v.system and u.system != v.system:
        raise ModulusSystemError("residue vectors belong to different systems")
    moduli = u.system.moduli
    if op == "add":
        out = ((a + b) % m for a, b, m in zip(u.residues, v.residues, moduli))
    elif op == "sub":
        out = ((a - b) % m for a, b, m in zip(u.residues, v.residues, moduli))
    elif op == "mul":
        out = ((a * b) % m for a, b, m in zip(u.residues, v.residues, moduli))
    else:
        raise ValueError(f"unknown residue operation {op!r}, expected one of {OPS}")
    return ResidueVector(u.system, tuple(out))


def reconstruct(v):
    """Garner mixed-radix reconstruction into [0, capacity)."""
    system = v.system
    moduli, inv = system.moduli, system.inverse_table
    digits = []
    for i, (r, mi) in enumerate(zip(v.residues, moduli)):
        t = r
        for j, y in enumerate(digits):
            t = (t - y) * inv[j][i] % mi
        digits.append(t)
    x, radix = 0, 1
    for y, m in zip(digits, moduli):
        x += y * radix
        radix *= m
    return x


def _crt_baseline(residues, moduli, capacity):
    out = 0
    for r, m in zip(residues, moduli):
        rest = capacity // m
        out += r * rest * pow(rest % m, -1, m)
    return out % capacity


def _sample(rng, capacity, bit_size):
    """Uniform below min(2^bit_size, capacity); bit_size <= capacity.bit_length()."""
    bound = min(1 << bit_size, capacity)
    nbytes = (bit_size + 7) // 8
    mask = (1 << bit_size) - 1
    while True:
        x = int.from_bytes(rng.bytes(nbytes), "little") & mask
        if x < bound:
            return x


def _timed(fn, items):
    start = time.perf_counter_ns()
    out = [fn(*it) for it in items]
    return out, time.perf_counter_ns() - start


def bench_roundtrip(system, num_values, bit_size=None, seed=None):
    """Correctness-checked timings of reduce, residue ops and reconstruct against big ints."""
    """Correctness-checked timings of reduce / residue ops / reconstruct against plain big-int code."""
    capacity = system.capacity
    if bit_size is not None and bit_size < 1:
        raise ValueError(f"bit_size must be positive, got {bit_size}")
    # clamped to the capacity width
    bit_size = min(bit_size or capacity.bit_length() - 1 or 1, capacity.bit_length())
    report = {
        "n": system.n,
        "c": system.c,
        "moduli": len(system.moduli),
        "capacity_bits": capacity.bit_length(),
        "num_values": num_values,
        "bit_size": bit_size,
        "products": "compared modulo capacity",
        "timings_ns": {},
    }
    if num_values <= 0:
        return report
    rng = np.random.default_rng(seed)
    xs = [_sample(rng, capacity, bit_size) for _ in range(num_values)]
    ys = [_sample(rng, capacity, bit_size) for _ in range(num_values)]

    rx, t_reduce = _timed(lambda x: reduce(x, system), [(x,) for x in xs])
    ry = [reduce(y, system) for y in ys]
    _, t_naive_reduce = _timed(lambda x: tuple(x % m for m in system.moduli), [(x,) for x in xs])
    back, t_reconstruct = _timed(reconstruct, [(v,) for v in rx])
    _, t_naive_crt = _timed(lambda v: _crt_baseline(v.residues, system.moduli, capacity),
                            [(v,) for v in rx])
    for x, v, b in zip(xs, rx, back):
        if v.residues != tuple(x % m for m in system.moduli) or b != x:
            raise ModulusSystemError(f"roundtrip failed for {x}")

    timings = {"reduce": t_reduce, "reduce_naive": t_naive_reduce,
               "reconstruct": t_reconstruct, "reconstruct_naive": t_naive_crt}
    naive = {"add": lambda a, b: (a + b) % capacity,
             "sub": lambda a, b: (a - b) % capacity,
             "mul": lambda a, b: (a * b) % capacity}
    for op in OPS:
        out, t_op = _timed(lambda u, v: residue_op(u, v, op), list(zip(rx, ry)))
        expected, t_naive = _timed(naive[op], list(zip(xs, ys)))
        for w, e in zip(out, expected):
            if reconstruct(w) != e:
                raise ModulusSystemError(f"{op} homomorphism failed")
        timings[op] = t_op
        timings[f"{op}_naive"] = t_naive
    report["timings_ns"] = timings
    return report


def system_to_text(system):
    lines = [f"n={system.n} c={system.c} k={','.join(map(str, system.members))}"]
    lines += [f"modulus {i} {hex(m)}" for i, m in enumerate(system.moduli)]
    L = len(system.moduli)
    for i in range(L):
        for j in range(L):
            if i != j:
                lines.append(f"inverse {i} {j} {hex(system.inverse_table[i][j])} "
                             f"{system.provenance[i][j]}")
    return "\n".join(lines) + "\n"


_SYS_HEAD = re.compile(r"^n=(\d+) c=(\d+) k=([\d,]+)$")
_SYS_MOD = re.compile(r"^modulus (\d+) 0x([0-9a-f]+)$")
_SYS_INV = re.compile(r"^inverse (\d+) (\d+) 0x([0-9a-f]+) (scalable|euclid)$")


def system_from_text(text):
    """Parse a moduli-set file and re-verify every modulus and inverse entry."""
    lines = text.rstrip("\n").split("\n")
    head = _SYS_HEAD.match(lines[0]) if lines else None
    if head is None:
        raise ModulusSystemError("malformed moduli-set header")
    n, c = int(head.group(1)), int(head.group(2))
    clique = Clique(n, tuple(int(x) for x in head.group(3).split(",")))
    members = clique.members
    L = len(members)
    moduli = [None] * L
    table = [[None] * L for _ in range(L)]
    prov = [[None] * L for _ in range(L)]
    for line in lines[1:]:
        m = _SYS_MOD.match(line)
        if m:
            if int(m.group(1)) >= L:
                raise ModulusSystemError(f"modulus index {m.group(1)} out of range")
            moduli[int(m.group(1))] = int(m.group(2), 16)
            continue
        m = _SYS_INV.match(line)
        if m is None:
            raise ModulusSystemError(f"malformed line {line!r}")
        i, j = int(m.group(1)), int(m.group(2))
        if not (i < L and j < L and i != j):
            raise ModulusSystemError(f"inverse entry ({i}, {j}) out of range")
        table[i][j], prov[i][j] = int(m.group(3), 16), m.group(4)
    expected = [Trinomial(n, k).modulus(c) for k in members]
    if moduli != expected:
        raise ModulusSystemError("moduli do not match n, c and k")
    if not verify_clique(n, members):
        raise ModulusSystemError(f"{members} is not a clique of T({n})")
    for i, j in ((i, j) for i in range(L) for j in range(L) if i != j):
        if table[i][j] is None or moduli[i] * table[i][j] % moduli[j] != 1:
            raise ModulusSystemError(f"inverse entry ({i}, {j}) missing or wrong")
    capacity = 1
    for m in moduli:
        capacity *= m
    return ModulusSystem(n, c, members, tuple(moduli), capacity,
                         tuple(map(tuple, table)), tuple(map(tuple, prov)))


def save_system(system, path):
    atomic_write_text(path, system_to_text(system))


def load_system(path):
    return system_from_text(read_text(path))
