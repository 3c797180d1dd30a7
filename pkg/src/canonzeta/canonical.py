"""Explicit elements: s, xi, sigma^c, z3 and the rational associator tau.

Everything is a DepthTuple of reduced rational functions.  Weights follow the
rule weight = degree + depth, so x1^{2n} in depth one has weight 2n+1.
"""

from functools import lru_cache
from math import comb, factorial

from .commrep import DepthTuple, reduce, rho, x_power
from .exactnum import Q, bernoulli, bfact
from .ihara import bracket, bracket_tuple, circ, exp_ad
from .ncwords import ad_pow, lie_bracket, x0, x1
from .polys import MPoly, RatFn, ratsum

CANONICAL = "canonical"
HERETICAL = "heretical"


def xpow(k):
    """x1^k as a depth-one rational function."""
    return x_power(1, 1, k)


def heretical_factor(n):
    """Scale taking the canonical weight 2n+1 object to the heretical one."""
    if n == -1:
        return Q(1, 12)
    return bfact(2 * n)


# ---------------------------------------------------------------------------
# s and xi


@lru_cache(maxsize=None)
def s_elements():
    s1 = RatFn.const(1, 1).divide_by_form([1]).scale(Q(1, 2))
    a = RatFn.const(2, 1).divide_by_form([1, 0]).divide_by_form([0, 1])
    b = RatFn.const(2, 1).divide_by_form([0, 1]).divide_by_form([1, -1])
    s2 = (a + b).scale(Q(1, 12))
    s3 = bracket(s1, s2).scale(Q(1, 2))
    return DepthTuple({1: s1, 2: s2, 3: s3}, weight=0)


@lru_cache(maxsize=None)
def xi(n, max_depth=3):
    """exp(ad s)(x1^{2n}) up to the given depth."""
    if n < -1:
        raise ValueError("xi is defined for n >= -1")
    if not 1 <= max_depth <= 4:
        raise ValueError("xi is available in depths 1 to 4")
    s = s_elements().truncate_depth(max_depth - 1)
    t = exp_ad(s, DepthTuple({1: xpow(2 * n)}), max_depth)
    t.weight = 2 * n + 1
    t.normalization = CANONICAL
    return t


def xi_heretical(n, max_depth=3):
    t = xi(n, max_depth).scale(heretical_factor(n))
    t.weight = 2 * n + 1
    t.normalization = HERETICAL
    return t


def xi_depth2_closed_form(n):
    """Three-fraction expression for {s1, x^{2n}} (with the overall factor 1/2)."""
    x1v = MPoly.var(2, 0)
    x2v = MPoly.var(2, 1)
    p = 2 * n
    a = RatFn(x2v ** p - (x2v - x1v) ** p).divide_by_form([1, 0])
    b = RatFn(x1v ** p - x2v ** p).divide_by_form([-1, 1])
    c = RatFn((x2v - x1v) ** p - x1v ** p).divide_by_form([0, 1])
    return ratsum([a, b, c], 2).scale(Q(1, 2))


# ---------------------------------------------------------------------------
# sigma^c


def sigma3_word():
    """[x0,[x0,x1]] + [[x0,x1],x1], whose depth-two part matches xi_3."""
    a = ad_pow(x0(), 1, x1())
    return ad_pow(x0(), 2, x1()) + lie_bracket(a, x1())


def word_tuple(p, weight=None):
    """Reduced depth components of a polynomial in x0, x1."""
    comps = {}
    for r in sorted(p.counting_degrees()):
        comps[r] = RatFn(reduce(rho(p.counting_part(r), r)))
    return DepthTuple(comps, weight=weight, normalization=CANONICAL)


def sigma_correction(n, max_depth=3):
    """Heretical sum_{a+b=n} (1/2b) {xi_{2a+1}, {xi_{2b+1}, xi_{-1}}}."""
    xm = xi_heretical(-1, max(1, max_depth - 2))
    total = DepthTuple({})
    for a in range(1, n):
        b = n - a
        inner = bracket_tuple(xi_heretical(b, max(1, max_depth - 2)), xm, max_depth - 1)
        outer = bracket_tuple(xi_heretical(a, max(1, max_depth - 2)), inner, max_depth)
        total = total + outer.scale(Q(1, 2 * b))
    return total


@lru_cache(maxsize=None)
def sigma_c(n, max_depth=3, normalization=CANONICAL):
    """sigma^c_{2n+1} in depths up to max_depth (at most 4)."""
    if n < 1:
        raise ValueError("sigma_c needs n >= 1")
    if not 1 <= max_depth <= 4:
        raise ValueError("sigma_c is available in depths 1 to 4")
    if n == 1:
        t = word_tuple(sigma3_word(), 3)
        if normalization == HERETICAL:
            t = t.scale(heretical_factor(1))
        t = t.truncate_depth(max_depth)
    else:
        t = xi_heretical(n, max_depth)
        if max_depth >= 3:
            t = t + sigma_correction(n, max_depth)
        if normalization == CANONICAL:
            t = t.scale(1 / heretical_factor(n))
    t.weight = 2 * n + 1
    t.normalization = normalization
    return t


def sigma3_polar_witness():
    """Depth-three difference between sigma^c_3 and xi_3."""
    return sigma_c(1, 3)[3] - xi(1, 3)[3]


def sigma_c_explicit_depth3(n):
    """xi^{(3)} + sum B_{2a}B_{2b}/B_{2n} C(2n,2a)/(24b) {x^{2a},{x^{2b},x^{-2}}}."""
    terms = [xi(n, 3)[3]]
    for a in range(1, n):
        b = n - a
        c = bernoulli(2 * a) * bernoulli(2 * b) / bernoulli(2 * n) * comb(2 * n, 2 * a) / (24 * b)
        terms.append(double_bracket(a, b).scale(c))
    return ratsum(terms, 3)


@lru_cache(maxsize=None)
def double_bracket(a, b):
    """{x^{2a}, {x^{2b}, x^{-2}}}."""
    return bracket(xpow(2 * a), bracket(xpow(2 * b), xpow(-2)))


def verify_polefree(t):
    """(ok, offending) where offending lists (depth, pole name) pairs."""
    bad = []
    for r in t.depths():
        f = t[r]
        for name in f.pole_names():
            bad.append((r, name))
    return not bad, bad


# ---------------------------------------------------------------------------
# z3


def z3():
    """4/3 + x1/(x3-x2) + x3/(x1-x2) + (x3-x2)/x1 + (x1-x2)/x3."""
    v = [MPoly.var(3, i) for i in range(3)]
    return ratsum([
        RatFn.const(3, Q(4, 3)),
        RatFn(v[0]).divide_by_form([0, -1, 1]),
        RatFn(v[2]).divide_by_form([1, -1, 0]),
        RatFn(v[2] - v[1]).divide_by_form([1, 0, 0]),
        RatFn(v[0] - v[1]).divide_by_form([0, 0, 1]),
    ], 3)


# ---------------------------------------------------------------------------
# tau

SLACK = 6


def _trunc(f, k):
    return f.truncate(k)


def b1_series(max_degree):
    """b(x) = 1/x + sum B_{2n}/(2n)! x^{2n-1} as a one-variable RatFn."""
    terms = {(0,): Q(1)}
    n = 1
    while 2 * n - 1 <= max_degree:
        terms[(2 * n,)] = bfact(2 * n)
        n += 1
    return RatFn(MPoly(1, terms)).divide_by_form([1])


def b_identity_residual(order=40):
    """b(x1)b(x2) - b(x1)b(x2-x1) + b(x2)b(x2-x1) - 1/4, exact below degree ``order``.

    b is known through degree ``order``, and each factor starts in degree -1.
    """
    b = b1_series(order)
    u, v, w = (b.substitute_linear([vec], 2) for vec in ([1, 0], [0, 1], [-1, 1]))
    lhs = ratsum([u * v, -(u * w), v * w, RatFn.const(2, Q(-1, 4))], 2)
    return lhs.truncate(order - 1)


class TauData:
    """All intermediate series of the tau construction at a fixed window."""

    def __init__(self, max_weight):
        if max_weight < 2 or max_weight % 2:
            raise ValueError("tau needs an even max weight >= 2")
        self.max_weight = max_weight
        K = max_weight + SLACK
        self.window = K
        t = _trunc

        def c(f, g):
            return t(circ(f, g), K)

        b1 = b1_series(K)
        b1x1 = b1.substitute_linear([[1, 0]], 2)
        b1x2 = b1.substitute_linear([[0, 1]], 2)
        b1d = b1.substitute_linear([[1, -1]], 2)
        b2 = t((b1x1 * b1x2 + b1x2 * b1d).scale(Q(1, 3)), K)
        self.b1, self.b2 = b1, b2
        b11 = c(b1, b1)
        g1 = b1.scale(Q(-1, 2))
        g2 = (b11.scale(Q(1, 2)) - b2).scale(Q(1, 4))
        # overall sign fixed by the semi-homogeneous equations (see notes)
        g3 = (c(b2, b1) - c(b1, b11).scale(Q(1, 6))).scale(Q(1, 8))
        self.gamma = {1: g1, 2: g2, 3: g3}
        s = s_elements()
        s1, s2 = s[1], s[2]
        th1 = g1
        th2 = g2 + c(s1, g1)
        th3 = ratsum([g3, c(s1, g2), c(s2, g1), c(s1, c(s1, g1)).scale(Q(1, 2))], 3)
        self.theta = {1: th1, 2: th2, 3: th3}
        self.pole_part = {}
        self.phi = {}
        for r, th in self.theta.items():
            parts = th.homogeneous_parts()
            bad = [d for d in parts if d < -r or d == 1 - r]
            if bad:
                raise ArithmeticError("unexpected homogeneous degrees %s in Theta^(%d)" % (bad, r))
            self.pole_part[r] = parts.get(-r, RatFn.const(r, 0))
            self.phi[r] = ratsum([p for d, p in parts.items() if d >= 2 - r], r)
        C2, C3 = self.counterterms(K)
        self.C = {2: C2, 3: C3}
        tau = {
            1: self.phi[1],
            2: self.phi[2] + C2,
            3: ratsum([self.phi[3], c(C2, self.phi[1]), C3], 3),
        }
        # compare only within the requested window
        self.tau_raw = tau
        self.tau = DepthTuple({r: f.truncate(max_weight - r) for r, f in tau.items()},
                              weight=max_weight)

    @staticmethod
    def counterterms(K):
        xm1 = xi_heretical(-1, 2)
        terms2, terms3 = [], []
        n = 1
        while 2 * n - 3 <= K:
            xn = xi_heretical(n, 2)
            w = Q(1, 2 * n)
            terms2.append(bracket(xm1[1], xn[1]).scale(w))
            terms3.append((bracket(xm1[1], xn[2]) + bracket(xm1[2], xn[1])).scale(w))
            n += 1
        return ratsum(terms2, 2).truncate(K), ratsum(terms3, 3).truncate(K)

    def tau_star(self):
        """Stuffle-regularized tau: tau*2 = tau2 + 1/48, tau*3 = tau3 - (1/96)(b(x1) - 1/x1)."""
        from .dshuffle import stuffle_regularized

        return stuffle_regularized(self.tau, self.max_weight)


@lru_cache(maxsize=None)
def tau_data(max_weight):
    return TauData(max_weight)


def tau(max_weight):
    return tau_data(max_weight).tau


# ---------------------------------------------------------------------------
# coefficients


def _coeff(f, composition):
    if not f.is_polynomial():
        raise ValueError("component has poles; coefficients are not defined")
    return f.num.coeff(tuple(k - 1 for k in composition))


def sigma_coeff(n, composition):
    composition = tuple(composition)
    if sum(composition) != 2 * n + 1:
        raise ValueError("composition must sum to %d" % (2 * n + 1))
    if not 1 <= len(composition) <= 4 or min(composition) < 1:
        raise ValueError("composition length must be 1..4 with positive parts")
    t = sigma_c(n, len(composition))
    return _coeff(t[len(composition)], composition)


def tau_coeff(composition, max_weight=None):
    composition = tuple(composition)
    w = sum(composition)
    if w % 2 or not 1 <= len(composition) <= 3 or min(composition) < 1:
        raise ValueError("tau coefficients need even weight and length 1..3")
    if max_weight is None:
        max_weight = max(2, w)
    if w > max_weight:
        raise ValueError("weight %d exceeds the truncation %d" % (w, max_weight))
    return _coeff(tau(max_weight)[len(composition)], composition)


def ihara_relation(depth):
    """Depth component of {xi_3, xi_9} - 3{xi_5, xi_7} (depth 2..4)."""
    md = depth - 1
    t = bracket_tuple(xi(1, md), xi(4, md), depth) - bracket_tuple(xi(2, md), xi(3, md), depth).scale(3)
    return t[depth]


def residue_x3(f):
    """Residue along x3 = 0 of a depth-three function, as a function of x1, x2."""
    from .commrep import residue

    r = residue(f, [0, 0, 1])
    return r.substitute_linear([[1, 0], [0, 1], [0, 0]], 2)
