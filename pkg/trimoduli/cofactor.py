"""Bezout cofactors, reduced resultants and scalable inverse polynomials for trinomial pairs.

A pair of inverse polynomials (A, B) for f = x^n - x^k + 1 and g = x^n - x^j + 1 is
scalable when A, B have dyadic coefficients, integer constant terms, positive leading
coefficients and degree at most n, and f(2^c) A(2^c) = 1 mod g(2^c),
g(2^c) B(2^c) = 1 mod f(2^c) for all large enough c.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd

from .bigpoly import (IntPoly, RatPoly, Trinomial, content, denominator_lcm,
                      euclid_divide, pseudo_divide)
from .resolve import dyadically_resolve, resultant_generic


class NotScalableError(ValueError):
    pass


class CertificateError(RuntimeError):
    pass


@dataclass(frozen=True)
class BezoutCertificate:
    """a f + b g = 1 with deg a < deg g and deg b < deg f."""
    f: IntPoly
    g: IntPoly
    a: RatPoly
    b: RatPoly
    reduced_resultant: int
    resultant: int

    def check(self):
        if self.a * self.f.to_rat() + self.b * self.g.to_rat() != RatPoly([1]):
            raise CertificateError("Bezout identity a f + b g = 1 fails")
        if self.resultant % self.reduced_resultant:
            raise CertificateError(f"reduced resultant {self.reduced_resultant} does not "
                                   f"divide the resultant {self.resultant}")
        if not same_prime_divisors(self.reduced_resultant, self.resultant):
            raise CertificateError("reduced resultant and resultant have different primes")
        return True


def same_prime_divisors(a, b):
    """True iff a and b have the same prime divisors (a, b nonzero)."""
    def strip(x, y):
        x = abs(x)
        g = gcd(x, y)
        while g > 1:
            while x % g == 0:
                x //= g
            g = gcd(x, y)
        return x
    return strip(a, b) == 1 and strip(b, a) == 1


def _check_monic(*polys):
    for p in polys:
        if p.is_zero() or p.lc != 1:
            raise ValueError(f"{p!r} is not monic")


def _primitive_triple(r, s, t):
    c = gcd(content(r), content(s), content(t))
    if c > 1:
        return (IntPoly([x // c for x in r.coeffs]), IntPoly([x // c for x in s.coeffs]),
                IntPoly([x // c for x in t.coeffs]))
    return r, s, t


def _extended_prs(f, g):
    """Return (S, T, m) over the integers with S f + T g = m, m a nonzero integer."""
    swap = f.degree < g.degree
    if swap:
        f, g = g, f
    r0, s0, t0 = f, IntPoly([1]), IntPoly()
    r1, s1, t1 = g, IntPoly(), IntPoly([1])
    while r1.degree > 0:
        delta = r0.degree - r1.degree
        mult = r1.lc ** (delta + 1)
        q, r = pseudo_divide(r0, r1)
        if r.is_zero():
            raise ValueError("polynomials share a common factor")
        s = s0 * mult - q * s1
        t = t0 * mult - q * t1
        r0, s0, t0 = r1, s1, t1
        r1, s1, t1 = _primitive_triple(r, s, t)
    m = r1.lc
    return (t1, s1, m) if swap else (s1, t1, m)


def _cofactors(f, g):
    """Unique (a, b) over the rationals with a f + b g = 1, deg a < deg g, deg b < deg f."""
    S, T, m = _extended_prs(f, g)
    a = S.to_rat() * Fraction(1, m)
    b = T.to_rat() * Fraction(1, m)
    if not a.is_zero() and a.degree >= g.degree:
        q, a = euclid_divide(a, g)
        b = b + q * f.to_rat()
    if a * f.to_rat() + b * g.to_rat() != RatPoly([1]):
        raise CertificateError("extended remainder sequence produced a wrong identity")
    return a, b


def bezout_cofactors(f, g):
    _check_monic(f, g)
    res = resultant_generic(f, g)
    if res == 0:
        raise ValueError("polynomials share a common factor")
    a, b = _cofactors(f, g)
    cert = BezoutCertificate(f, g, a, b, lcm_denominators(a, b), res)
    cert.check()
    return cert


def lcm_denominators(a, b):
    da, db = denominator_lcm(a), denominator_lcm(b)
    return da * db // gcd(da, db)


def reduced_resultant(f, g):
    """Smallest positive integer in the ideal (f, g) of Z[x]."""
    _check_monic(f, g)
    a, b = _cofactors(f, g)
    return lcm_denominators(a, b)


def _is_power_of_two(m):
    return m > 0 and m & (m - 1) == 0


def dyadic_cofactor_check(f, g):
    """True iff every Bezout cofactor coefficient has a power-of-two denominator."""
    return _is_power_of_two(reduced_resultant(f, g))


@dataclass(frozen=True)
class AdjustmentStep:
    kind: str
    shift: Fraction


def adjust_cofactors(u, v, p, q):
    """Make u an inverse polynomial of p modulo q with integer constant term and positive lc.

    Starting from u p + v q = 1 with deg u < deg q, applies the constant-term shift
    u <- u - s q, v <- v + s p (s the fractional part of u(0) / q(0)) and, when the
    leading coefficient is negative, u <- u + c q, v <- v - c p with the least such
    positive integer c. Returns (u, v, steps); the identity is checked after each step.
    """
    p, q = p.to_rat(), q.to_rat()
    one = RatPoly([1])
    q0 = q.coeff(0)
    if q0 == 0:
        raise ValueError("modulus polynomial needs a nonzero constant term")
    steps = []

    def checked(u, v, kind, shift):
        if u * p + v * q != one:
            raise CertificateError(f"identity lost after {kind} adjustment")
        steps.append(AdjustmentStep(kind, Fraction(shift)))
        return u, v

    ratio = u.coeff(0) / q0
    s = ratio - floor(ratio)
    if s:
        u, v = checked(u - q * s, v + p * s, "constant", s)
    if u.lc < 0:
        c = 1 if u.degree < q.degree else max(1, floor(-u.lc) + 1)
        u, v = checked(u + q * c, v - p * c, "leading", c)
    return u, v, steps


@dataclass(frozen=True)
class ScalableInversePair:
    """a inverts x^n - x^k + 1 modulo x^n - x^j + 1, b the other way round."""
    n: int
    k: int
    j: int
    a: RatPoly
    b: RatPoly
    reduced_resultant: int
    steps: tuple = field(default=(), compare=False)

    @property
    def f(self):
        return Trinomial(self.n, self.k).poly()

    @property
    def g(self):
        return Trinomial(self.n, self.j).poly()

    def moduli(self, c):
        return Trinomial(self.n, self.k).modulus(c), Trinomial(self.n, self.j).modulus(c)


def _is_dyadic(p):
    return all(_is_power_of_two(c.denominator) for c in p.coeffs)


def scalable_inverse_pair(n, k, j):
    t1, t2 = Trinomial(n, k), Trinomial(n, j)
    if k == j or not dyadically_resolve(t1, t2).resolves:
        raise NotScalableError(f"x^{n} - x^{k} + 1 and x^{n} - x^{j} + 1 do not "
                               f"dyadically resolve")
    f, g = t1.poly(), t2.poly()
    a, b = _cofactors(f, g)
    rr = lcm_denominators(a, b)
    if not _is_power_of_two(rr):
        raise CertificateError(f"resolving pair ({n}, {k}, {j}) has reduced resultant {rr}")
    A, _, steps_a = adjust_cofactors(a, b, f, g)
    B, _, steps_b = adjust_cofactors(b, a, g, f)
    for P in (A, B):
        if not _is_dyadic(P) or P.coeff(0).denominator != 1 or P.lc <= 0 or P.degree > n:
            raise CertificateError(f"adjusted inverse {P!r} is not scalable")
    return ScalableInversePair(n, k, j, A, B, rr, tuple(steps_a + steps_b))


@dataclass(frozen=True)
class ScalabilityCheck:
    identity_ok: bool
    failing_c: tuple
    threshold: object

    def __bool__(self):
        return self.identity_ok and not self.failing_c


def _inverse_at(P, mod_self, mod_other, c):
    value = P(Fraction(1 << c))
    if value.denominator != 1:
        return False
    return (mod_self * value.numerator - 1) % mod_other == 0


def verify_scalability(pair, c_range):
    """Exact identity a f = 1 mod g (and b g = 1 mod f) plus the integer congruences on c_range."""
    c_range = list(c_range)
    if not c_range or min(c_range) < 1:
        raise ValueError("c_range must be a nonempty range of positive integers")
    f, g = pair.f.to_rat(), pair.g.to_rat()
    one = RatPoly([1])
    identity_ok = (euclid_divide(pair.a * f, g)[1] == one and
                   euclid_divide(pair.b * g, f)[1] == one)
    failing = []
    for c in c_range:
        F, G = pair.moduli(c)
        if not (_inverse_at(pair.a, F, G, c) and _inverse_at(pair.b, G, F, c)):
            failing.append(c)
    threshold = None
    if c_range[-1] not in failing:
        threshold = c_range[0]
        for c in failing:
            threshold = max(threshold, c + 1)
    return ScalabilityCheck(identity_ok, tuple(failing), threshold)


def _coeffs_text(p):
    if p.is_zero():
        return "0/1"
    return ",".join(f"{c.numerator}/{c.denominator}" for c in p.coeffs)


def _coeffs_parse(text):
    out = []
    for item in text.split(","):
        num, sep, den = item.partition("/")
        if not sep:
            raise ValueError(f"coefficient {item!r} is not num/den")
        out.append(Fraction(int(num), int(den)))
    return RatPoly(out)


def certificate_text(pair, c_range):
    c_range = list(c_range)
    return "\n".join([
        "SCALABLE 1",
        f"n={pair.n} k={pair.k} j={pair.j}",
        f"a={_coeffs_text(pair.a)}",
        f"b={_coeffs_text(pair.b)}",
        f"reduced_resultant={pair.reduced_resultant}",
        f"verified_c={c_range[0]}..{c_range[-1]}",
    ]) + "\n"


_CERT = re.compile(r"^SCALABLE 1\nn=(\d+) k=(\d+) j=(\d+)\na=(\S+)\nb=(\S+)\n"
                   r"reduced_resultant=(\d+)\nverified_c=(\d+)\.\.(\d+)\n$")


def parse_certificate(text):
    """Return (pair, c_range) from a SCALABLE 1 certificate."""
    m = _CERT.match(text)
    if m is None:
        raise ValueError("malformed SCALABLE certificate")
    n, k, j = int(m.group(1)), int(m.group(2)), int(m.group(3))
    for middle in (k, j):
        Trinomial(n, middle)
    pair = ScalableInversePair(n, k, j, _coeffs_parse(m.group(4)), _coeffs_parse(m.group(5)),
                               int(m.group(6)))
    return pair, range(int(m.group(7)), int(m.group(8)) + 1)


def check_certificate(text):
    """Re-verify a certificate from scratch; returns the ScalabilityCheck."""
    pair, c_range = parse_certificate(text)
    check = verify_scalability(pair, c_range)
    if pair.reduced_resultant != reduced_resultant(pair.f, pair.g):
        return ScalabilityCheck(False, check.failing_c, check.threshold)
    return check
