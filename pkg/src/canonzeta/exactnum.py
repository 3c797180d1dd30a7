"""Exact rationals, Bernoulli numbers and truncated Laurent series in one variable.

All coefficients in the package are ``gmpy2.mpq`` values.  They are always
reduced with a positive denominator, and they interoperate with ``int`` and
``fractions.Fraction``.
"""

import threading
from fractions import Fraction
from math import comb, factorial

from gmpy2 import mpq

Q = mpq
ZERO = mpq(0)
ONE = mpq(1)


def to_q(x):
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to an exact rational."""
    if isinstance(x, str):
        return mpq(Fraction(x.strip()))
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, float):
        raise TypeError("floating point values are not exact")
    return mpq(x)


def q_str(x):
    """Serialize a rational as ``"p/q"``, dropping ``/1``."""
    x = mpq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def q_parse(s):
    return to_q(s)


def binomial(n, k):
    if k < 0 or k > n:
        return 0
    return comb(n, k)


_bern_lock = threading.Lock()
_bern = [ONE]


def bernoulli(n):
    """Bernoulli number B_n with the convention B_1 = -1/2.

    >>> bernoulli(12)
    mpq(-691,2730)
    """
    if n < 0:
        raise ValueError("bernoulli index must be nonnegative")
    if n < len(_bern):
        return _bern[n]
    with _bern_lock:
        while len(_bern) <= n:
            m = len(_bern)
            s = sum(comb(m + 1, k) * _bern[k] for k in range(m))
            _bern.append(-s / (m + 1))
    return _bern[n]


def bfact(n):
    """B_n / n!, the coefficient appearing in both b(x) and the heretical rescaling."""
    return bernoulli(n) / factorial(n)


class LaurentSeries:
    """A Laurent series in one variable known up to degree ``truncation_order``.

    ``coefficients[i]`` is the coefficient of ``x**(min_degree + i)``.
    Terms of degree beyond ``truncation_order`` are unknown.
    """

    def __init__(self, coeffs, truncation_order):
        # coeffs: dict degree -> rational
        self.truncation_order = truncation_order
        clean = {}
        for d, c in dict(coeffs).items():
            c = to_q(c)
            if c and d <= truncation_order:
                clean[d] = c
        self._c = clean

    @property
    def min_degree(self):
        return min(self._c) if self._c else self.truncation_order + 1

    @property
    def coefficients(self):
        if not self._c:
            return []
        lo = self.min_degree
        return [self._c.get(d, ZERO) for d in range(lo, self.truncation_order + 1)]

    def coeff(self, d):
        if d > self.truncation_order:
            raise ValueError("degree %d lies beyond the truncation order" % d)
        return self._c.get(d, ZERO)

    def items(self):
        return sorted(self._c.items())

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries({0: other}, self.truncation_order)
        t = min(self.truncation_order, other.truncation_order)
        out = dict(self._c)
        for d, c in other._c.items():
            out[d] = out.get(d, ZERO) + c
        return LaurentSeries(out, t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries({d: -c for d, c in self._c.items()}, self.truncation_order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            c = to_q(other)
            return LaurentSeries({d: c * v for d, v in self._c.items()}, self.truncation_order)
        # the product is known up to min(t1 + v2, t2 + v1)
        t = min(self.truncation_order + other.min_degree,
                other.truncation_order + self.min_degree)
        out = {}
        for d1, c1 in self._c.items():
            for d2, c2 in other._c.items():
                if d1 + d2 <= t:
                    out[d1 + d2] = out.get(d1 + d2, ZERO) + c1 * c2
        return LaurentSeries(out, t)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        t = min(self.truncation_order, other.truncation_order)
        keys = set(self._c) | set(other._c)
        return all(self._c.get(d, ZERO) == other._c.get(d, ZERO) for d in keys if d <= t)

    def __repr__(self):
        terms = " + ".join("%s*x^%d" % (q_str(c), d) for d, c in self.items())
        return "LaurentSeries(%s + O(x^%d))" % (terms or "0", self.truncation_order + 1)


def b_series(truncation_order):
    """b(x) = 1/(e^x - 1) + 1/2 = 1/x + sum_{n>=1} B_{2n}/(2n)! x^{2n-1}."""
    if truncation_order < -1:
        raise ValueError("truncation order must be at least -1")
    coeffs = {-1: ONE}
    n = 1
    while 2 * n - 1 <= truncation_order:
        coeffs[2 * n - 1] = bfact(2 * n)
        n += 1
    return LaurentSeries(coeffs, truncation_order)
