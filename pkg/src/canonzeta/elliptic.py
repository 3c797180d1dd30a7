"""Genus one: epsilon derivations, the map phi, B-degree tests and the lift checks."""

from functools import lru_cache
from math import factorial

from .canonical import heretical_factor, s_elements, sigma_c, xi, z3
from .commrep import c_forms, ell_forms, ell_prime, rho, rho_inv, unreduce
from .exactnum import Q, bernoulli
from .ihara import bracket_y, odot_y
from .linalg import solve_particular
from .ncwords import (GENUS0, GENUS1, KILLS_COMMUTATOR, Derivation, NCPoly, ad_pow,
                      apply_derivation, concat, derivation_bracket, lie_bracket)
from .polys import MPoly, RatFn, ratsum


def a():
    return NCPoly.letter(GENUS1, 0)


def b():
    return NCPoly.letter(GENUS1, 1)


def words_with(na, nb):
    """All words with na a's and nb b's."""
    out = [""]
    for _ in range(na + nb):
        out = [w + c for w in out for c in "ab"]
    return [w for w in out if w.count("b") == nb]


def solve_b_image(da):
    """Solve [a, X] = -[da, b] for X with no pure-a terms."""
    rhs = -lie_bracket(da, b())
    if not rhs:
        return NCPoly.zero(GENUS1)
    na = {w.count("a") for w in rhs.terms}
    nb = {w.count("b") for w in rhs.terms}
    if len(na) != 1 or len(nb) != 1:
        raise ValueError("image of a must be bihomogeneous")
    na, nb = na.pop() - 1, nb.pop()
    unknowns = words_with(na, nb)
    rows = {}
    for w in unknowns:
        img = lie_bracket(a(), NCPoly.word(w, GENUS1))
        for u, c in img.terms.items():
            rows.setdefault(u, {})[w] = c
    keys = sorted(set(rows) | set(rhs.terms))
    sol = solve_particular([rows.get(k, {}) for k in keys], [rhs.coeff(k) for k in keys])
    if sol is None:
        raise ArithmeticError("no derivation with this image of a kills [a, b]")
    return NCPoly(GENUS1, sol)


@lru_cache(maxsize=None)
def epsilon(n):
    """The derivation with a -> ad(a)^{2n+2} b that kills [a, b]."""
    if n < -1:
        raise ValueError("epsilon index needs n >= -1")
    if n == -1:
        return Derivation(GENUS1, b(), NCPoly.zero(GENUS1), KILLS_COMMUTATOR)
    da = ad_pow(a(), 2 * n + 2, b())
    return Derivation(GENUS1, da, solve_b_image(da), KILLS_COMMUTATOR)


def epsilon_heretical(n):
    return epsilon(n).scale(heretical_factor(n))


def derivation_from_a_image(da):
    """Derivation killing [a, b] with prescribed image of a (no a-term in the image of b)."""
    parts = {}
    for w, c in da.terms.items():
        key = (w.count("a"), w.count("b"))
        parts.setdefault(key, {})[w] = c
    db = NCPoly.zero(GENUS1)
    for terms in parts.values():
        db = db + solve_b_image(NCPoly(GENUS1, terms))
    return Derivation(GENUS1, da, db, KILLS_COMMUTATOR)


# ---------------------------------------------------------------------------
# phi


def hain_phi(max_b):
    """phi(x0) = sum_k (B_k/k!) (ad b)^k a for k <= max_b."""
    out = NCPoly.zero(GENUS1)
    term = a()
    for k in range(max_b + 1):
        c = bernoulli(k) / factorial(k)
        if c:
            out = out + term.scale(c)
        term = lie_bracket(b(), term)
    return out


def phi_apply(p, max_b, images=None):
    """Image of a genus-zero polynomial, dropping terms of B-degree above max_b."""
    if images is None:
        images = {"0": hain_phi(max_b), "1": lie_bracket(a(), b())}
    out = NCPoly.zero(GENUS1)
    cache = {"": NCPoly.one(GENUS1)}

    def img(w):
        if w in cache:
            return cache[w]
        left = img(w[:-1])
        r = concat(left, images[w[-1]]).truncate(max_count=max_b)
        cache[w] = r
        return r

    for w, c in sorted(p.terms.items()):
        out = out + img(w).scale(c)
    return out


def phi_zero(p):
    """Associated graded map: x0 -> a, x1 -> [a, b]."""
    return phi_apply(p, None, {"0": a(), "1": lie_bracket(a(), b())})


def phi_zero_check(p):
    r = p.counting_degrees()
    if len(r) != 1:
        raise ValueError("phi_zero_check needs a polynomial of a single depth")
    r = r.pop()
    lhs = rho(phi_zero(p), r)
    ell = MPoly.const(r + 1, 1)
    for v in ell_forms(r):
        ell = ell * MPoly.linear(v)
    return lhs == ell * rho(p, r)


# ---------------------------------------------------------------------------
# B-degree


def min_b(p, letter="b"):
    return min((w.count(letter) for w in p.terms), default=None)


def b_degree_predicates(d, r, max_b=6):
    """(agree, in_Br) for the three characterizations of B^r membership."""
    def ge(p, k):
        m = min_b(p)
        return m is None or m >= k

    c1 = ge(d.image_first, r) and ge(d.image_second, r + 1)
    c2 = ge(d.image_first, r)
    phi0 = hain_phi(max_b)
    img = apply_derivation(d, phi0).truncate(max_count=max_b)
    c3 = ge(img, r)
    return (c1 == c2 == c3), c1 and c2 and c3


# ---------------------------------------------------------------------------
# chi equations


def _y(f):
    return unreduce(f) if f.nvars else f


def chi_residuals(n, chi=None):
    """Residuals of the three chi equations, in the y-frame.

    The depth-three equation is read as an identity of operators applied to
    y0: every term X is evaluated as X (*) y0, so that its two sides are
    compared in the faithful module where it was derived.
    """
    if chi is None:
        x = xi(n, 3)
        chi = {r: unreduce(x[r]) for r in (1, 2, 3)}
    s = s_elements()
    s1, s2 = unreduce(s[1]), unreduce(s[2])
    y0 = RatFn(MPoly.var(1, 0))
    y = MPoly.var(2, 0) - MPoly.var(2, 1)
    e1 = RatFn((-y) ** (2 * n))
    res1 = chi[1] - e1
    res2 = chi[2] - bracket_y(s1, chi[1])

    def act(X):
        return odot_y(X, y0)

    lhs = -odot_y(e1, act(s2))
    rhs = ratsum([act(chi[3]), -act(bracket_y(s1, chi[2])),
                  act(bracket_y(s1, bracket_y(s1, chi[1]))).scale(Q(1, 2)),
                  -odot_y(s2, act(chi[1]))], 4)
    return res1, res2, lhs - rhs


def chi_equations_check(n, chi=None):
    return all(r.is_zero() for r in chi_residuals(n, chi))


# ---------------------------------------------------------------------------
# lifts


def lift_delta(n, with_correction=True):
    """eps_{2n+2} + sum_{a+b=n} (1/2b) [eps_{2a+2}, [eps_{2b+2}, eps_0]], heretical."""
    d = epsilon_heretical(n)
    if with_correction:
        e0 = epsilon_heretical(-1)
        for i in range(1, n):
            j = n - i
            inner = derivation_bracket(epsilon_heretical(j), e0)
            d = d + derivation_bracket(epsilon_heretical(i), inner).scale(Q(1, 2 * j))
    return d


def genus0_polynomial(t, max_depth=3):
    """Sum over depths of rho^{-1} of the un-reduced components."""
    out = NCPoly.zero(GENUS0)
    for r in t.depths():
        if r <= max_depth:
            out = out + rho_inv(unreduce(t[r]).as_poly(), r)
    return out


def lift_theorem_residual(n, with_correction=True):
    """delta(phi(x0)) - phi([x0, sigma]) modulo B-degree 4."""
    from .ncwords import x0

    max_b = 3
    delta = lift_delta(n, with_correction)
    sigma = genus0_polynomial(sigma_c(n, 3, "heretical"))
    lhs = apply_derivation(delta, hain_phi(max_b)).truncate(max_count=max_b)
    rhs = phi_apply(lie_bracket(x0(), sigma), max_b)
    return lhs - rhs


def lift_theorem_check(n, with_correction=True):
    return lift_theorem_residual(n, with_correction).is_zero()


def pollack_residual():
    e = epsilon
    d = derivation_bracket(e(1), e(4)) - derivation_bracket(e(2), e(3)).scale(3)
    return d


def pollack_check():
    return pollack_residual().is_zero()


@lru_cache(maxsize=None)
def z3_derivation(scale=1):
    """Derivation whose reduced ell' image is scale * z3."""
    f = unreduce(z3().scale(scale))
    for v in c_forms(3):
        f = f.multiply_by_form(v)
    da = rho_inv(f.as_poly(), 3, GENUS1)
    return derivation_from_a_image(da)


def epsilon_bracket_images(weight):
    """ell' images of heretical epsilon brackets landing in the given weight.

    Double brackets [e_{2a+2}, e_{2b+2}] have weight 2a + 2b + 2, triple brackets
    [e_{2a+2}, [e_{2b+2}, e_{2c+2}]] weight 2a + 2b + 2c + 3. Index -1 stands for e0.
    """
    eh = epsilon_heretical
    out = []
    if weight % 2 == 0:
        h = weight // 2 - 1
        for a in range(-1, h + 2):
            b = h - a
            if a < b and b >= -1:
                out.append((f"[e{2 * a + 2},e{2 * b + 2}]", derivation_bracket(eh(a), eh(b))))
    else:
        h = (weight - 3) // 2
        for a in range(-1, h + 2):
            for b in range(-1, h + 2):
                c = h - a - b
                if b < c and c >= -1:
                    inner = derivation_bracket(eh(b), eh(c))
                    out.append((f"[e{2 * a + 2},[e{2 * b + 2},e{2 * c + 2}]]",
                                derivation_bracket(eh(a), inner)))
    return [(name, ell_prime(d)) for name, d in out if not d.is_zero()]
