"""The linearized Ihara action and bracket on words and on rational functions.

On words, a o (x0^n x1 w) = x0^n a x1 w + x0^n x1 a* w + x0^n x1 (a o w),
and a o x0^n = x0^n a.  The bracket is {f, g} = f o g - g o f.

On functions of y0..yr, f o g is a sum of products of f and g evaluated on
consecutive and reversed blocks of variables.  ``circ_y`` works in the y-frame.
``circ`` works directly on reduced representations (y0 = 0), which is what the
rest of the package uses.
"""

from functools import lru_cache

from .commrep import DepthTuple, reduce, unreduce
from .exactnum import Q
from .ncwords import GENUS0, NCPoly, concat, star
from .polys import RatFn, ratsum


# ---------------------------------------------------------------------------
# words


def circ_words(a, p):
    """a o p, linear in both arguments; p is any polynomial in x0, x1."""
    x0, x1 = p.alphabet.letters
    a_star = star(a)
    out = NCPoly.zero(p.alphabet)
    memo = {}

    def on_word(w):
        if w in memo:
            return memo[w]
        i = w.find(x1)
        if i < 0:
            res = concat(NCPoly.word(w, p.alphabet), a)
        else:
            pre = NCPoly.word(w[:i], p.alphabet)
            pre1 = NCPoly.word(w[:i + 1], p.alphabet)
            rest = w[i + 1:]
            rest_p = NCPoly.word(rest, p.alphabet)
            res = (concat(concat(pre, a), NCPoly.word(w[i:], p.alphabet))
                   + concat(concat(pre1, a_star), rest_p)
                   + concat(pre1, on_word(rest)))
        memo[w] = res
        return res

    for w, c in p.terms.items():
        out = out + on_word(w).scale(c)
    return out


def bracket_words(f, g):
    return circ_words(f, g) - circ_words(g, f)


# ---------------------------------------------------------------------------
# rational functions, y-frame


def _unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


def _sign_parts(f, r):
    """Split f into (sign, part) with sign = (-1)^(deg + r) for each homogeneous part."""
    return [(-1 if (d + r) % 2 else 1, part) for d, part in f.homogeneous_parts().items()]


def circ_y(f, g):
    """f o g for f a function of y0..yr and g of y0..ys (RatFn in r+1, s+1 variables)."""
    r = f.nvars - 1
    s = g.nvars - 1
    n = r + s + 1
    terms = []
    for i in range(s + 1):
        fa = f.substitute_linear([_unit(n, i + j) for j in range(r + 1)], n)
        gidx = list(range(i + 1)) + list(range(i + r + 1, r + s + 1))
        ga = g.substitute_linear([_unit(n, k) for k in gidx], n)
        terms.append(fa * ga)
    for sign, part in _sign_parts(f, r):
        for i in range(1, s + 1):
            fa = part.substitute_linear([_unit(n, i + r - j) for j in range(r + 1)], n)
            gidx = list(range(i)) + list(range(i + r, r + s + 1))
            ga = g.substitute_linear([_unit(n, k) for k in gidx], n)
            terms.append((fa * ga).scale(sign))
    return ratsum(terms, n)


def concat_y(f, g):
    """(f . g)(y0..y_{r+s}) = f(y0..yr) g(yr..y_{r+s})."""
    r = f.nvars - 1
    s = g.nvars - 1
    n = r + s + 1
    fa = f.substitute_linear([_unit(n, j) for j in range(r + 1)], n)
    ga = g.substitute_linear([_unit(n, r + j) for j in range(s + 1)], n)
    return fa * ga


def odot_y(f, g):
    """f (*) g = f o g - f . g (the action on the unreduced space)."""
    return circ_y(f, g) - concat_y(f, g)


def bracket_y(f, g):
    return circ_y(f, g) - circ_y(g, f)


# ---------------------------------------------------------------------------
# rational functions, reduced frame


@lru_cache(maxsize=None)
def _reduced_plan(r, s):
    """Substitution vectors for the reduced formula (x0 = 0 implicitly)."""
    n = r + s

    def xv(k):
        return _unit(n, k - 1) if k > 0 else [0] * n

    def diff(a, b):
        return [p - q for p, q in zip(xv(a), xv(b))]

    direct = []
    for i in range(s + 1):
        fv = [diff(i + j, i) for j in range(1, r + 1)]
        gidx = list(range(1, i + 1)) + list(range(i + r + 1, n + 1))
        direct.append((fv, [xv(k) for k in gidx]))
    rev = []
    for i in range(1, s + 1):
        fv = [diff(i + r - j, i + r) for j in range(1, r + 1)]
        gidx = list(range(1, i)) + list(range(i + r, n + 1))
        rev.append((fv, [xv(k) for k in gidx]))
    return direct, rev


def circ(f, g):
    """f o g on reduced representations: f of depth r, g of depth s >= 0.

    A depth-zero g is a constant.
    """
    r = f.nvars
    s = g.nvars
    n = r + s
    direct, rev = _reduced_plan(r, s)
    terms = []
    for fv, gv in direct:
        terms.append(f.substitute_linear(fv, n) * g.substitute_linear(gv, n))
    if rev:
        for sign, part in _sign_parts(f, r):
            for fv, gv in rev:
                fa = part.substitute_linear(fv, n)
                terms.append((fa * g.substitute_linear(gv, n)).scale(sign))
    return ratsum(terms, n)


def bracket(f, g):
    return circ(f, g) - circ(g, f)


def concat_rf(f, g):
    """Reduced form of (f . g): f(x1..xr) g(x_{r+1} - x_r, ..., x_{r+s} - x_r)."""
    r = f.nvars
    s = g.nvars
    n = r + s
    fa = f.substitute_linear([_unit(n, j) for j in range(r)], n)
    gv = []
    for j in range(1, s + 1):
        v = _unit(n, r + j - 1)
        if r:
            v[r - 1] -= 1
        gv.append(v)
    return fa * g.substitute_linear(gv, n)


def odot(f, g):
    return circ(f, g) - concat_rf(f, g)


def star_product(f, g):
    """(f * g)(x1, x2) = f(x1)g(x2) - f(x2-x1)g(x2) + f(x2-x1)g(x1) - f(x2)g(x1)."""
    def at(h, v):
        return h.substitute_linear([v], 2)

    e1, e2, d = [1, 0], [0, 1], [-1, 1]
    return ratsum([at(f, e1) * at(g, e2), -(at(f, d) * at(g, e2)),
                   at(f, d) * at(g, e1), -(at(f, e2) * at(g, e1))], 2)


def circ_y_reduced(f, g):
    """Oracle route: un-reduce, apply the y-frame formula, reduce again."""
    return reduce(circ_y(unreduce(f), unreduce(g)))


# ---------------------------------------------------------------------------
# depth tuples


def _tuple_op(op, F, G, max_depth):
    out = {}
    for r, f in F.components.items():
        for s, g in G.components.items():
            if max_depth is not None and r + s > max_depth:
                continue
            h = op(f, g)
            out.setdefault(r + s, []).append(h)
    comps = {k: ratsum(v, k) for k, v in out.items()}
    return DepthTuple(comps)


def circ_tuple(F, G, max_depth=None):
    return _tuple_op(circ, F, G, max_depth)


def bracket_tuple(F, G, max_depth=None):
    return _tuple_op(bracket, F, G, max_depth)


def exp_ad(s, target, max_depth):
    """exp(ad s)(target) = sum_k ad(s)^k target / k!, truncated at max_depth."""
    total = target.truncate_depth(max_depth)
    term = total
    k = 1
    while True:
        term = bracket_tuple(s, term, max_depth).scale(Q(1, k))
        if term.is_zero():
            break
        total = total + term
        k += 1
    return total


def dx1_identity_check(w, r):
    """Reduced rho of delta_{x1}(w) against {f x_r^-1, x1^-1} x_{r+1}, f the reduced rho(w).

    delta_{x1} is the derivation x0 -> x1, x1 -> 0.  ``w`` must be a Lie
    polynomial of depth r.  Returns (lhs, rhs) as reduced functions of r+1
    variables.
    """
    from .commrep import rho
    from .ncwords import KILLS_SECOND, Derivation, apply_derivation, is_lie_graded

    if not is_lie_graded(w) or w.counting_degrees() != {r}:
        raise ValueError("dx1_identity_check needs a Lie polynomial of depth %d" % r)
    f = RatFn(reduce(rho(w, r)))
    d = Derivation(GENUS0, NCPoly.word("1", GENUS0), None, KILLS_SECOND)
    lhs = reduce(RatFn(rho(apply_derivation(d, w), r + 1)))
    fr = f.divide_by_form(_unit(r, r - 1))
    inv_x1 = RatFn.const(1, 1).divide_by_form([1])
    rhs = bracket(fr, inv_x1).multiply_by_form(_unit(r + 1, r))
    return lhs, rhs
