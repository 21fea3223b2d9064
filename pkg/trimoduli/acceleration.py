"""Compiled and parallelized functions."""

import numpy as np
from numba import njit, prange


@njit
def _powmod(b, e, p):
    r = 1
    b %= p
    while e > 0:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


@njit
def _top(c, deg):
    while deg >= 0 and c[deg] == 0:
        deg -= 1
    return deg


@njit
def resultant_mod_p(f, g, p):
    """Return res(f, g) mod p by the Euclidean remainder sequence over GF(p).

    f and g are int64 coefficient arrays (index i holds x^i), p a prime below 2^31
    that does not divide either leading coefficient.
    """
    size = max(f.shape[0], g.shape[0])
    a = np.zeros(size, dtype=np.int64)
    b = np.zeros(size, dtype=np.int64)
    for i in range(f.shape[0]):
        a[i] = f[i] % p
    for i in range(g.shape[0]):
        b[i] = g[i] % p
    da = _top(a, size - 1)
    db = _top(b, size - 1)
    if da < 0 or db < 0:
        return 0
    res = 1
    while db > 0:
        inv = _powmod(b[db], p - 2, p)
        for i in range(da - db, -1, -1):
            coef = a[i + db] * inv % p
            if coef != 0:
                for t in range(db + 1):
                    a[i + t] = (a[i + t] - coef * b[t]) % p
        dr = _top(a, min(da, db - 1))
        if dr < 0:
            return 0
        # res(a, b) = (-1)^(da*db) lc(b)^(da - dr) res(b, a mod b)
        if (da * db) % 2 == 1:
            res = (p - res) % p
        res = res * _powmod(b[db], da - dr, p) % p
        a, b = b, a
        da, db = db, dr
    return res * _powmod(b[0], da, p) % p


@njit
def xd_trinomial_residue(d, a, b, p):
    """res(x^d - 1, x^a - x^b + 1) mod p for exponents a, b < d."""
    f = np.zeros(d + 1, dtype=np.int64)
    f[d] = 1
    f[0] = p - 1
    g = np.zeros(d + 1, dtype=np.int64)
    g[a] += 1
    g[b] -= 1
    g[0] += 1
    return resultant_mod_p(f, g, p)


@njit(parallel=True)
def xd_trinomial_residues(d_arr, a_arr, b_arr, primes, counts):
    """Return the residue table of res(x^d - 1, x^a - x^b + 1) for a batch of keys.

    Row i holds the residues modulo primes[:counts[i]], the rest stays zero.
    """
    # pylint: disable=not-an-iterable
    out = np.zeros((d_arr.shape[0], primes.shape[0]), dtype=np.int64)
    for i in prange(d_arr.shape[0]):
        for t in range(counts[i]):
            out[i, t] = xd_trinomial_residue(d_arr[i], a_arr[i], b_arr[i], primes[t])
    return out
