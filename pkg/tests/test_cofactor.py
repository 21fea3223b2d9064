import random
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from trimoduli.bigpoly import IntPoly, RatPoly, euclid_divide, trinomial
from trimoduli.cofactor import (NotScalableError, ScalableInversePair, adjust_cofactors,
                                bezout_cofactors, certificate_text, check_certificate,
                                dyadic_cofactor_check, parse_certificate, reduced_resultant,
                                same_prime_divisors, scalable_inverse_pair, verify_scalability)
from trimoduli.resolve import pair_verdict_table

C_RANGE = range(1, 9)


def _x(*coeffs):
    return IntPoly(list(coeffs))


def _random_monic(rng, max_degree=3):
    deg = rng.randint(1, max_degree)
    return IntPoly([rng.randint(-3, 3) for _ in range(deg)] + [1])


def _ideal_constants(f, g, bound=2):
    """Nonzero integers A f mod g for small integer A with deg A < deg g."""
    out = []
    for coeffs in product(range(-bound, bound + 1), repeat=g.degree):
        A = IntPoly(list(coeffs))
        if A.is_zero():
            continue
        r = euclid_divide((A * f).to_rat(), g.to_rat())[1]
        if r.degree == 0:
            out.append(abs(int(r.coeffs[0])))
    return out


def test_bezout_small_example():
    cert = bezout_cofactors(_x(-1, 0, 1), _x(3, 0, 1))
    assert cert.a == RatPoly([Fraction(-1, 4)])
    assert cert.b == RatPoly([Fraction(1, 4)])
    assert cert.reduced_resultant == 4
    assert cert.resultant == 16
    assert min(_ideal_constants(_x(-1, 0, 1), _x(3, 0, 1))) == 4


def test_bezout_linear():
    cert = bezout_cofactors(_x(0, 1), _x(1, 1))
    assert (cert.a, cert.b) == (RatPoly([-1]), RatPoly([1]))
    assert cert.reduced_resultant == 1


def test_bezout_rejects():
    with pytest.raises(ValueError):
        bezout_cofactors(_x(1, 2), _x(1, 1))
    with pytest.raises(ValueError):
        bezout_cofactors(_x(-1, 0, 1), _x(-1, 1))


def test_bezout_trinomials():
    cert = bezout_cofactors(trinomial(20, 12), trinomial(20, 4))
    assert cert.a.degree < 20 and cert.b.degree < 20
    rr = cert.reduced_resultant
    assert rr & (rr - 1) == 0


def test_reduced_resultant_random_pairs():
    rng = random.Random(1111)
    checked = 0
    while checked < 200:
        f, g = _random_monic(rng, 8), _random_monic(rng, 8)
        try:
            cert = bezout_cofactors(f, g)
        except ValueError:
            continue
        rr = cert.reduced_resultant
        assert cert.resultant % rr == 0
        assert same_prime_divisors(rr, cert.resultant)
        assert (cert.a * rr).is_integral() and (cert.b * rr).is_integral()
        # exhaustive ideal search only while 3^deg(g) stays small
        if g.degree <= 3:
            for c in _ideal_constants(f, g, bound=1):
                assert c % rr == 0
        assert reduced_resultant(f, g) == rr
        checked += 1


def test_same_prime_divisors():
    assert same_prime_divisors(12, 18)
    assert same_prime_divisors(-4, 16)
    assert not same_prime_divisors(6, 4)


def test_dyadic_cofactor_check():
    assert dyadic_cofactor_check(trinomial(20, 12), trinomial(20, 4))
    assert dyadic_cofactor_check(_x(-1, 0, 1), _x(3, 0, 1))
    assert not dyadic_cofactor_check(_x(-1, 0, 1), _x(2, 0, 1))


@pytest.mark.slow
def test_dyadic_cofactors_match_graph():
    for n in range(3, 61):
        coprime, resolves = pair_verdict_table(n)
        for k in range(2, n):
            for j in range(1, k):
                f, g = trinomial(n, k), trinomial(n, j)
                if not coprime[k - 1, j - 1]:
                    with pytest.raises(ValueError):
                        dyadic_cofactor_check(f, g)
                    continue
                assert dyadic_cofactor_check(f, g) == resolves[k - 1, j - 1]


def test_adjust_cofactors():
    f, g = _x(-1, 0, 1), _x(3, 0, 1)
    u, v, steps = adjust_cofactors(RatPoly([Fraction(-1, 4)]), RatPoly([Fraction(1, 4)]), f, g)
    assert u == RatPoly([0, 0, Fraction(1, 12)])
    assert u * f.to_rat() + v * g.to_rat() == RatPoly([1])
    assert [s.kind for s in steps] == ["constant", "leading"]
    assert steps[0].shift == Fraction(11, 12)
    assert steps[1].shift == 1


def test_scalable_pair_example():
    pair = scalable_inverse_pair(20, 12, 4)
    assert pair.a == RatPoly([1, 0, 0, 0, 0, 0, 0, 0, 1])
    b = [0] * 21
    b[0], b[8], b[12], b[20] = 1, -1, -1, 1
    assert pair.b == RatPoly(b)
    assert pair.reduced_resultant == 1
    assert bool(verify_scalability(pair, C_RANGE))

    swapped = scalable_inverse_pair(20, 4, 12)
    assert swapped.a == pair.b and swapped.b == pair.a


def test_cardioid_pairs_scale_everywhere():
    for n in range(5, 31):
        for k in range(1, (n + 1) // 2):
            pair = scalable_inverse_pair(n, k, 2 * k)
            check = verify_scalability(pair, C_RANGE)
            assert check and check.threshold == 1


def test_edges_of_t10_are_scalable(graph_of):
    g = graph_of(10)
    for i, j in g.edges():
        pair = scalable_inverse_pair(10, j, i)
        for P in (pair.a, pair.b):
            assert P.lc > 0 and P.coeff(0).denominator == 1 and P.degree <= 10
        check = verify_scalability(pair, range(1, 41))
        assert check.identity_ok
        assert check.threshold is not None


def test_not_scalable(graph_of):
    dense = graph_of(10).to_dense()
    i, j = map(int, np.argwhere(~dense & ~np.eye(9, dtype=bool))[0])
    with pytest.raises(NotScalableError):
        scalable_inverse_pair(10, i + 1, j + 1)
    with pytest.raises(NotScalableError):
        scalable_inverse_pair(10, 3, 3)


def test_mutated_inverse_fails():
    pair = scalable_inverse_pair(20, 12, 4)
    broken = ScalableInversePair(20, 12, 4, pair.a + RatPoly([0, 1]), pair.b,
                                 pair.reduced_resultant)
    check = verify_scalability(broken, C_RANGE)
    assert not check.identity_ok and not check
    with pytest.raises(ValueError):
        verify_scalability(pair, range(0, 3))


def test_certificate_roundtrip():
    pair = scalable_inverse_pair(20, 12, 4)
    text = certificate_text(pair, C_RANGE)
    assert text.startswith("SCALABLE 1\nn=20 k=12 j=4\n")
    parsed, c_range = parse_certificate(text)
    assert parsed == pair
    assert list(c_range) == list(C_RANGE)
    assert check_certificate(text)


def test_certificate_tampering():
    text = certificate_text(scalable_inverse_pair(20, 12, 4), C_RANGE)
    assert not check_certificate(text.replace("a=1/1", "a=3/1", 1))
    assert not check_certificate(text.replace("reduced_resultant=1", "reduced_resultant=2"))
    with pytest.raises(ValueError):
        parse_certificate(text.replace("SCALABLE 1", "SCALABLE 2"))
    with pytest.raises(ValueError):
        parse_certificate(text.replace("n=20", "n=10"))
