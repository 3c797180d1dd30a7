"""Period polynomials, the kernel of the depth-two bracket, and cuspidal elements.

Weights: a kernel element of weight w pairs x1^{2i} with x1^{2j} where
2i + 2j = w - 2, and the matching period polynomial has degree w - 2.
"""

from functools import lru_cache
from math import comb, factorial, gcd

from .canonical import (CANONICAL, HERETICAL, double_bracket, heretical_factor, sigma_c,
                        xpow, z3)
from .commrep import DepthTuple, ell_prime
from .exactnum import Q, bernoulli
from .ihara import bracket, bracket_tuple
from .linalg import LinSystem
from .ncwords import derivation_bracket
from .polys import MPoly, RatFn, ratsum


def _integral(vec):
    """Scale a rational vector to coprime integers, first nonzero entry positive."""
    keys = [k for k in sorted(vec) if vec[k]]
    if not keys:
        return {}
    den = 1
    for k in keys:
        d = int(vec[k].denominator)
        den = den * d // gcd(den, d)
    ints = {k: int(vec[k] * den) for k in keys}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if ints[keys[0]] < 0:
        g = -g
    return {k: Q(v // g) for k, v in ints.items()}


# ---------------------------------------------------------------------------
# period polynomials


def _mono(i, d):
    return MPoly(2, {(i, d - i): Q(1)})


def period_poly_system(weight, even_only=False):
    """Linear system on the coefficients of x1^i x2^{d-i}, 0 < i < d, d = weight - 2."""
    d = weight - 2
    cols = list(range(1, d))
    if even_only:
        cols = [i for i in cols if i % 2 == 0 and (d - i) % 2 == 0]
    sys = LinSystem(cols)
    swap = [[0, 1], [1, 0]]
    t1 = [[1, -1], [1, 0]]
    t2 = [[0, -1], [1, -1]]
    rows = {}
    for i in cols:
        m = _mono(i, d)
        image = m + m.linear_substitute(swap, 2)
        for e, c in image.terms.items():
            rows.setdefault(("swap", e), {})[i] = rows.get(("swap", e), {}).get(i, 0) + c
        image = m + m.linear_substitute(t1, 2) + m.linear_substitute(t2, 2)
        for e, c in image.terms.items():
            rows.setdefault(("three", e), {})[i] = rows.get(("three", e), {}).get(i, 0) + c
    for key in sorted(rows):
        sys.add_row(rows[key])
    return sys


def is_period_polynomial(p, even_only=False):
    if p.is_zero():
        return True
    d = {sum(e) for e in p.terms}
    if len(d) != 1:
        return False
    d = d.pop()
    if any(e[0] == 0 or e[1] == 0 for e in p.terms):
        return False
    if even_only and any(e[0] % 2 for e in p.terms):
        return False
    swap = p + p.linear_substitute([[0, 1], [1, 0]], 2)
    three = p + p.linear_substitute([[1, -1], [1, 0]], 2) + p.linear_substitute([[0, -1], [1, -1]], 2)
    return swap.is_zero() and three.is_zero()


@lru_cache(maxsize=None)
def _period_basis(weight, even_only):
    if weight < 4:
        return ()
    d = weight - 2
    sys = period_poly_system(weight, even_only)
    out = []
    for vec in sys.nullspace():
        vec = _integral(vec)
        out.append(MPoly(2, {(i, d - i): c for i, c in vec.items()}))
    return tuple(out)


def period_poly_basis(weight, even_only=False):
    """Basis of (even) period polynomials of the given weight (degree weight - 2)."""
    if weight < 2:
        raise ValueError("weight must be at least 2")
    return list(_period_basis(weight, bool(even_only)))


# ---------------------------------------------------------------------------
# kernel of the bracket


def kernel_pairs(weight):
    h = weight // 2 - 1
    return [(i, h - i) for i in range(1, h) if i < h - i]


class KernelElement:
    """Antisymmetric coefficients lambda_{i,j}, stored for i < j."""

    def __init__(self, weight, coeffs):
        self.weight = weight
        self.coeffs = {k: Q(v) for k, v in coeffs.items() if v}

    def lam(self, i, j):
        if i < j:
            return self.coeffs.get((i, j), Q(0))
        if i > j:
            return -self.coeffs.get((j, i), Q(0))
        return Q(0)

    def items(self):
        return sorted(self.coeffs.items())

    def scale(self, c):
        return KernelElement(self.weight, {k: v * c for k, v in self.coeffs.items()})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return KernelElement(self.weight, out)

    def __eq__(self, other):
        return self.weight == other.weight and self.coeffs == other.coeffs

    def to_triples(self):
        return [[i, j, str(c)] for (i, j), c in self.items()]

    def __repr__(self):
        return f"KernelElement({self.weight}, {self.items()})"


def bracket_image(k):
    """sum_{i<j} lambda_{i,j} {x1^{2i}, x1^{2j}} as a depth-two function."""
    return ratsum([bracket(xpow(2 * i), xpow(2 * j)).scale(c) for (i, j), c in k.items()], 2)


@lru_cache(maxsize=None)
def _kernel(weight):
    pairs = kernel_pairs(weight)
    sys = LinSystem(pairs)
    rows = {}
    for p in pairs:
        img = bracket(xpow(2 * p[0]), xpow(2 * p[1]))
        for e, c in img.num.terms.items():
            rows.setdefault(e, {})[p] = c
    for e in sorted(rows):
        sys.add_row(rows[e])
    return tuple(KernelElement(weight, _integral(v)) for v in sys.nullspace())


def kernel_K(weight):
    """Basis of the kernel of the depth-two bracket in the given weight."""
    if weight < 4:
        raise ValueError("weight must be at least 4")
    return list(_kernel(weight))


def K_to_period(k):
    d = k.weight - 2
    terms = {}
    for (i, j), c in k.items():
        terms[(2 * i, 2 * j)] = terms.get((2 * i, 2 * j), 0) + c
        terms[(2 * j, 2 * i)] = terms.get((2 * j, 2 * i), 0) - c
    p = MPoly(2, terms)
    if not is_period_polynomial(p, even_only=True):
        raise ArithmeticError("image of a kernel element is not a period polynomial")
    assert all(sum(e) == d for e in p.terms)
    return p


def period_to_K(p, weight):
    """Read the coefficients lambda_{i,j}, i < j, back off a polynomial."""
    out = {}
    for (i, j) in kernel_pairs(weight):
        c = p.coeff((2 * i, 2 * j))
        if c:
            out[(i, j)] = c
    return KernelElement(weight, out)


def _rescale_factor(i):
    return Q(factorial(2 * i)) / bernoulli(2 * i)


def underline_rescale(k, inverse=False):
    """lambda_{i,j} -> lambda_{i,j} ((2i)!/B_{2i}) ((2j)!/B_{2j})."""
    out = {}
    for (i, j), c in k.items():
        f = _rescale_factor(i) * _rescale_factor(j)
        out[(i, j)] = c / f if inverse else c * f
    return KernelElement(k.weight, out)


# ---------------------------------------------------------------------------
# cuspidal elements


def cuspidal_direct(k, normalization=CANONICAL):
    """sum_{i<j} lambda_{i,j} {sigma^c_{2i+1}, sigma^c_{2j+1}} in depths up to 4."""
    total = DepthTuple({})
    for (i, j), c in k.items():
        b = bracket_tuple(sigma_c(i, 3, normalization), sigma_c(j, 3, normalization), 4)
        total = total + b.scale(c)
    return total


# depth-three part of sigma^c_3 not produced by xi_3: sigma^c_3 - xi_3 = Z3_COEFF * z3
Z3_COEFF = Q(-1, 4)


def cuspidal_formula(k):
    """Depth-four component of the cuspidal element, assembled from brackets of powers."""
    terms = []
    for i in range(1, k.weight):
        for j in range(2, k.weight):
            lam = k.lam(i, j)
            if not lam:
                continue
            for a in range(1, j):
                b = j - a
                c = (bernoulli(2 * a) * bernoulli(2 * b) / bernoulli(2 * j)
                     * comb(2 * j, 2 * a) / (24 * b))
                terms.append(bracket(xpow(2 * i), double_bracket(a, b)).scale(lam * c))
    for i in range(2, k.weight):
        lam = k.lam(i, 1)
        if lam:
            terms.append(bracket(xpow(2 * i), z3()).scale(lam * Z3_COEFF))
    return ratsum(terms, 4)


def cuspidal_c(k):
    """rho^(4) of the cuspidal element; both routes must agree."""
    direct = cuspidal_direct(k)
    f = direct[4] if 4 in direct.components else RatFn.const(4, 0)
    g = cuspidal_formula(k)
    if f != g:
        raise ArithmeticError("cuspidal element: direct bracket and closed formula disagree")
    return f


def cuspidal_lower_depths_vanish(k):
    d = cuspidal_direct(k)
    return all(d[r].is_zero() for r in (1, 2, 3) if r in d.components)


def elliptic_c(k_under, z3_scale=None):
    """The elliptic cuspidal derivation for a rescaled kernel element."""
    from .elliptic import epsilon_heretical, z3_derivation

    if z3_scale is None:
        z3_scale = Z3_COEFF * heretical_factor(1)
    eh = epsilon_heretical
    e0 = eh(-1)
    total = None

    def add(t, d):
        return d if t is None else t + d

    z = z3_derivation(z3_scale)
    for j in range(2, k_under.weight):
        lam = k_under.lam(1, j)
        if lam:
            total = add(total, derivation_bracket(z, eh(j)).scale(lam))
    for i in range(1, k_under.weight):
        for j in range(2, k_under.weight):
            lam = k_under.lam(i, j)
            if not lam:
                continue
            for a in range(1, j):
                b = j - a
                inner = derivation_bracket(eh(a), derivation_bracket(eh(b), e0))
                total = add(total, derivation_bracket(eh(i), inner).scale(lam * Q(1, 2 * b)))
    return total


def elliptic_agrees(k):
    """Compare ell' of the elliptic form with the heretical genus-zero element."""
    ku = underline_rescale(k)
    lhs = ell_prime(elliptic_c(ku))
    rhs = cuspidal_direct(ku, HERETICAL)
    return lhs.components.keys() <= {4} and lhs[4] == rhs[4]
