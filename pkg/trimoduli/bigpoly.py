"""Exact dense polynomials over the integers and the rationals."""

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd, lcm


@total_ordering
class _MinusInfinity(object):
    """Degree of the zero polynomial; absorbs integer addition."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("MINUS_INFINITY")

    def __add__(self, other):
        if isinstance(other, int) or other is self:
            return self
        return NotImplemented

    __radd__ = __add__

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()


class _DensePoly(object):
    """Immutable coefficient tuple, index i holding the coefficient of x^i."""
    __slots__ = ("coeffs",)

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    def __init__(self, coeffs=()):
        c = [self._coerce(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def monomial(cls, deg, coeff=1):
        return cls([0] * deg + [coeff])

    @classmethod
    def constant(cls, value):
        return cls([value])

    @property
    def degree(self):
        if not self.coeffs:
            return MINUS_INFINITY
        return len(self.coeffs) - 1

    @property
    def lc(self):
        """Leading coefficient, 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check_domain(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} "
                            f"with {type(other).__name__}")

    def __add__(self, other):
        self._check_domain(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return type(self)(out)

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, _DensePoly):
            self._check_domain(other)
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return type(self)()
            out = [0] * (len(a) + len(b) - 1)
            b_terms = [(j, cb) for j, cb in enumerate(b) if cb]
            for i, ca in enumerate(a):
                if ca == 0:
                    continue
                for j, cb in b_terms:
                    out[i + j] += ca * cb
            return type(self)(out)
        return type(self)([c * other for c in self.coeffs])

    def __rmul__(self, other):
        if isinstance(other, _DensePoly):
            return NotImplemented
        return self * other

    def __eq__(self, other):
        if isinstance(other, _DensePoly):
            return type(other) is type(self) and self.coeffs == other.coeffs
        if not self.coeffs:
            return other == 0
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def __call__(self, v):
        return eval_at(self, v)

    def __repr__(self):
        if not self.coeffs:
            return f"{type(self).__name__}(0)"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return f"{type(self).__name__}({' + '.join(terms).replace('+ -', '- ')})"


class IntPoly(_DensePoly):
    """Polynomial with arbitrary-precision integer coefficients."""
    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            return c.numerator
        if isinstance(c, bool) or not isinstance(c, int):
            c_int = int(c)
            if c_int != c:
                raise ValueError(f"non-integer coefficient {c!r}")
            return c_int
        return c

    def to_rat(self):
        return RatPoly(self.coeffs)


class RatPoly(_DensePoly):
    """Polynomial with exact rational coefficients, each stored in lowest terms."""
    __slots__ = ()

    @staticmethod
    def _coerce(c):
        return Fraction(c)

    def to_rat(self):
        return self

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)


@dataclass(frozen=True)
class Trinomial:
    """The pair (n, k) standing for x^n - x^k + 1."""
    n: int
    k: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError(f"trinomial needs 0 < k < n, got n={self.n}, k={self.k}")

    def poly(self):
        coeffs = [0] * (self.n + 1)
        coeffs[0] = 1
        coeffs[self.k] = -1
        coeffs[self.n] = 1
        return IntPoly(coeffs)

    def modulus(self, c=1):
        return (1 << (c * self.n)) - (1 << (c * self.k)) + 1

    def reflect(self):
        return Trinomial(self.n, self.n - self.k)


def trinomial(n, k):
    return Trinomial(n, k).poly()


def cyclotomic_2power(t):
    """Phi_{2^t}(x) = x^(2^(t-1)) + 1."""
    if t < 1:
        raise ValueError("t must be at least 1")
    return IntPoly.monomial(1 << (t - 1)) + IntPoly.constant(1)


def euclid_divide(f, g):
    """Return (q, r) with f = g*q + r and deg r < deg g, over the rationals."""
    f, g = f.to_rat(), g.to_rat()
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f.coeffs)
    dg = g.degree
    inv_lc = 1 / g.lc
    if len(r) - 1 < dg:
        return RatPoly(), f
    q = [Fraction(0)] * (len(r) - dg)
    for i in range(len(r) - 1 - dg, -1, -1):
        c = r[i + dg] * inv_lc
        q[i] = c
        if c:
            for t, gc in enumerate(g.coeffs):
                r[i + t] -= c * gc
    return RatPoly(q), RatPoly(r[:dg])


def pseudo_divide(f, g):
    """Return (q, r) with lc(g)^(deg f - deg g + 1) * f = q*g + r, deg r < deg g."""
    if g.is_zero():
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    dg = g.degree
    if f.is_zero() or f.degree < dg:
        return IntPoly(), f
    lc_g = g.lc
    r = list(f.coeffs)
    q = [0] * (f.degree - dg + 1)
    for i in range(f.degree - dg, -1, -1):
        c = r[i + dg]
        if lc_g != 1:
            q = [lc_g * x for x in q]
            r = [lc_g * x for x in r]
        q[i] += c
        if c:
            for t, gc in enumerate(g.coeffs):
                r[i + t] -= c * gc
    return IntPoly(q), IntPoly(r[:dg])


def pseudo_remainder(f, g):
    """prem(f, g): lc(g)^(deg f - deg g + 1) * f reduced modulo g, over the integers."""
    return pseudo_divide(f, g)[1]


def content(f):
    """Positive gcd of the coefficients (0 for the zero polynomial)."""
    return gcd(*f.coeffs) if f.coeffs else 0


def primitive_part(f):
    c = content(f)
    if c in (0, 1):
        return f
    return IntPoly([x // c for x in f.coeffs])


def denominator_lcm(p):
    """Least common multiple of the reduced coefficient denominators (1 for p = 0)."""
    return lcm(1, *(c.denominator for c in p.to_rat().coeffs))


def substitute_power(f, a):
    """Return f(x^a)."""
    if a < 1:
        raise ValueError("power must be at least 1")
    if a == 1 or f.is_zero():
        return f
    out = [0] * (a * f.degree + 1)
    for i, c in enumerate(f.coeffs):
        out[a * i] = c
    return type(f)(out)


def reverse_coeffs(f):
    """Reciprocal polynomial x^deg(f) * f(1/x); needs a nonzero constant term."""
    if f.is_zero() or f.coeffs[0] == 0:
        raise ValueError("reciprocal needs a nonzero constant term")
    return type(f)(f.coeffs[::-1])


def eval_at(f, v):
    """Exact Horner evaluation."""
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * v + c
    return acc
