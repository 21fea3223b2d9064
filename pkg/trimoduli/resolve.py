"""Resultants of trinomials, dyadic resolution and the binomial/cyclotomic special cases.

All resultants are exact signed integers. Dyadic decisions only look at |res|.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Optional

import numpy as np
from sympy import prevprime
from sympy.ntheory.modular import crt

from .acceleration import resultant_mod_p, xd_trinomial_residues
from .bigpoly import (IntPoly, content, cyclotomic_2power,
                      pseudo_remainder)

# Word-sized primes for the multi-modular path, products stay below 2^62
PRIME_CEILING = 1 << 31


@dataclass(frozen=True)
class DyadicVerdict:
    """Whether a resultant is a signed power of two, with its 2-adic split."""
    resolves: bool
    exponent: Optional[int]
    odd_part: int

    @classmethod
    def from_resultant(cls, value):
        if value == 0:
            return cls(False, None, 0)
        exponent, odd = split_dyadic(value)
        if abs(odd) == 1:
            return cls(True, exponent, odd)
        return cls(False, exponent, odd)


def nu2(n):
    """2-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("the 2-adic valuation of 0 is undefined")
    return (n & -n).bit_length() - 1


def split_dyadic(value):
    """Return (e, odd) with value = 2^e * odd."""
    e = nu2(value)
    return e, value >> e


def is_signed_power_of_two(value):
    return value != 0 and abs(split_dyadic(value)[1]) == 1


def resultant_generic(f, g):
    """Exact res(f, g) over the integers by the subresultant remainder sequence."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree

    a_cont, b_cont = content(f), content(g)
    A = IntPoly([c // a_cont for c in f.coeffs])
    B = IntPoly([c // b_cont for c in g.coeffs])
    t = a_cont ** g.degree * b_cont ** f.degree
    s = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            s = -1
    g_, h = 1, 1
    while True:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            s = -s
        R = pseudo_remainder(A, B)
        A = B
        den = g_ * h ** delta
        B = IntPoly([c // den for c in R.coeffs])
        g_ = A.lc
        if delta:
            h = g_ ** delta // h ** (delta - 1)
        if B.is_zero():
            return 0
        if B.degree == 0:
            break
    h = B.lc ** A.degree // h ** (A.degree - 1)
    return s * t * h


@lru_cache(maxsize=None)
def word_primes(count):
    """The `count` largest primes below 2^31, descending."""
    primes = []
    p = PRIME_CEILING
    for _ in range(count):
        p = prevprime(p)
        primes.append(p)
    return tuple(primes)


def _primes_for_bound(bound, skip=1):
    """Enough word primes coprime to `skip` whose product exceeds 2*bound."""
    chosen, prod, count = [], 1, 8
    while prod <= 2 * bound:
        chosen, prod = [], 1
        for p in word_primes(count):
            if skip % p == 0:
                continue
            chosen.append(p)
            prod *= p
            if prod > 2 * bound:
                break
        count *= 2
    return chosen


def hadamard_bound(f, g):
    """Upper bound on |res(f, g)| from coefficient 2-norms."""
    nf = isqrt(sum(c * c for c in f.coeffs)) + 1
    ng = isqrt(sum(c * c for c in g.coeffs)) + 1
    return nf ** g.degree * ng ** f.degree


def _symmetric_crt(primes, residues):
    value, modulus = crt(list(primes), [int(r) for r in residues], check=False)
    value, modulus = int(value), int(modulus)
    return value - modulus if value > modulus // 2 else value


def resultant_modular(f, g):
    """Exact res(f, g) from residues modulo word primes, rebuilt by CRT."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree
    primes = _primes_for_bound(hadamard_bound(f, g), skip=f.lc * g.lc)
    residues = []
    for p in primes:
        fa = np.array([c % p for c in f.coeffs], dtype=np.int64)
        ga = np.array([c % p for c in g.coeffs], dtype=np.int64)
        residues.append(resultant_mod_p(fa, ga, p))
    return _symmetric_crt(primes, residues)


def _reduced_exponents_raw(n, b, d):
    """x^n - x^b + 1 modulo x^d - 1, as an IntPoly of degree < d."""
    coeffs = [0] * d
    coeffs[n % d] += 1
    coeffs[b % d] -= 1
    coeffs[0] += 1
    return IntPoly(coeffs)


def _xd_minus_1(d):
    return IntPoly.monomial(d) - IntPoly.constant(1)


def resultant_with_xd_minus_1(t, d, method="subresultant"):
    """Product of t(w) over the d-th roots of unity, i.e. res(x^d - 1, t).

    The trinomial's exponents are reduced modulo d before the resultant is taken.
    """
    if d < 1:
        raise ValueError("d must be positive")
    r = _reduced_exponents_raw(t.n, t.k % d, d)
    if r.is_zero():
        return 0
    engine = resultant_modular if method == "modular" else resultant_generic
    return engine(_xd_minus_1(d), r)


def resultant_trinomial_fast(t1, t2, method="subresultant"):
    """Exact signed res(x^n - x^k + 1, x^n - x^j + 1) through x^|k-j| - 1.

    With d = |k - j| and R = res(x^d - 1, t1), the resultant is (-1)^(nk) R when
    k > j and (-1)^(n(j+1)) R when k < j.
    """
    if t1.n != t2.n:
        raise ValueError(f"degrees differ: {t1.n} != {t2.n}")
    if t1.k == t2.k:
        raise ValueError("equal middle exponents share every root")
    n, k, j = t1.n, t1.k, t2.k
    R = resultant_with_xd_minus_1(t1, abs(k - j), method=method)
    if k > j:
        return -R if (n * k) % 2 else R
    return -R if (n * (j + 1)) % 2 else R


def dyadically_resolve(t1, t2, method="subresultant"):
    if t1.n != t2.n:
        raise ValueError(f"degrees differ: {t1.n} != {t2.n}")
    if t1.k == t2.k:
        return DyadicVerdict(False, None, 0)
    return DyadicVerdict.from_resultant(resultant_trinomial_fast(t1, t2, method=method))


def resultant_with_cyclotomic_2power(t, i):
    """res(x^n - x^k + 1, Phi_{2^i})."""
    return resultant_generic(t.poly(), cyclotomic_2power(i))


def swan_binomial_resultant(n, j):
    """|res(x^n + 2, x^(2^j) + 1)| = |((-2)^(2^j/g) - (-1)^(n/g))^g|, g = gcd(2^j, n)."""
    if n < 1 or j < 0:
        raise ValueError("need n >= 1 and j >= 0")
    m = 1 << j
    g = gcd(m, n)
    return abs(((-2) ** (m // g) - (-1) ** (n // g)) ** g)


def swan_resolves(n, j):
    """The binomial pair resolves exactly when nu2(n) = j."""
    return nu2(n) == j


def _xd_bound(d):
    # |t(w)| <= 3 on the unit circle
    return 3 ** d


def pair_keys(n):
    """Map each pair k > j of T(n) to its key (d, k mod d); returns (keys, pair_index)."""
    index = {}
    pair_index = {}
    for k in range(2, n):
        for j in range(1, k):
            d = k - j
            key = (d, k % d)
            pair_index[(j, k)] = index.setdefault(key, len(index))
    return list(index), pair_index


def key_verdicts(n, keys):
    """Exact (coprime, resolves) flags for keys (d, b) of T(n), via the compiled kernel."""
    if not keys:
        return np.zeros(0, dtype=bool), np.zeros(0, dtype=bool)
    d_arr = np.array([d for d, _ in keys], dtype=np.int64)
    b_arr = np.array([b for _, b in keys], dtype=np.int64)
    a_arr = np.array([n % d for d, _ in keys], dtype=np.int64)
    counts_py = [len(_primes_for_bound(_xd_bound(d))) for d in d_arr.tolist()]
    primes = np.array(word_primes(max(counts_py)), dtype=np.int64)
    counts = np.array(counts_py, dtype=np.int64)
    table = xd_trinomial_residues(d_arr, a_arr, b_arr, primes, counts)

    coprime = np.zeros(len(keys), dtype=bool)
    resolves = np.zeros(len(keys), dtype=bool)
    prime_list = [int(p) for p in primes]
    for i, cnt in enumerate(counts_py):
        row = table[i, :cnt]
        if not row.any():
            continue
        value = _symmetric_crt(prime_list[:cnt], row.tolist())
        coprime[i] = value != 0
        resolves[i] = is_signed_power_of_two(value)
    return coprime, resolves


def pair_verdict_table(n, method="modular"):
    """Dense (n-1)x(n-1) boolean tables (coprime, resolves) over vertices 1..n-1."""
    size = max(n - 1, 0)
    coprime = np.zeros((size, size), dtype=bool)
    resolves = np.zeros((size, size), dtype=bool)
    if n < 3:
        return coprime, resolves
    keys, pair_index = pair_keys(n)
    if method == "modular":
        key_coprime, key_resolves = key_verdicts(n, keys)
    elif method == "subresultant":
        key_coprime = np.zeros(len(keys), dtype=bool)
        key_resolves = np.zeros(len(keys), dtype=bool)
        for i, (d, b) in enumerate(keys):
            r = _reduced_exponents_raw(n, b, d)
            value = 0 if r.is_zero() else resultant_generic(_xd_minus_1(d), r)
            key_coprime[i] = value != 0
            key_resolves[i] = is_signed_power_of_two(value)
    else:
        raise ValueError(f"unknown resultant method {method!r}")
    for (j, k), i in pair_index.items():
        coprime[k - 1, j - 1] = coprime[j - 1, k - 1] = key_coprime[i]
        resolves[k - 1, j - 1] = resolves[j - 1, k - 1] = key_resolves[i]
    return coprime, resolves
