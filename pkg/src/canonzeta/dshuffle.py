"""Double shuffle defects in depths one to three, plus ranks of linearized systems.

Every function here works on reduced representations.  In these, a depth-d
component is a rational function of x1..xd.  The ``at`` helper evaluates a
component at integer linear combinations of the target variables.
"""

import itertools
import json
from math import comb

from .commrep import DepthTuple
from .exactnum import Q, bfact, q_str
from .polys import MPoly, RatFn, ratsum

SHUFFLE = "shuffle"
STUFFLE_MOD_PRODUCTS = "stuffle_mod_products"
LINEARIZED_STUFFLE = "linearized_stuffle"
FULL_SHUFFLE = "full_shuffle"
FULL_STUFFLE = "full_stuffle"


class DefectReport:
    def __init__(self, flavor, depth, residual):
        self.flavor = flavor
        self.depth = depth
        self.residual = residual

    @property
    def satisfied(self):
        return self.residual.is_zero()

    def to_dict(self):
        res = DepthTuple({self.residual.nvars: self.residual}) if self.residual.nvars else None
        return {"flavor": self.flavor, "depth": self.depth, "satisfied": self.satisfied,
                "residual": res.to_dict() if res else {"components": []}}

    def to_json(self):
        return json.dumps(self.to_dict())

    def __repr__(self):
        return "DefectReport(%s, depth %d, satisfied=%s)" % (self.flavor, self.depth, self.satisfied)


def _vec(n, idx):
    """Sum of x_i for 1-based indices in idx (negative index means subtract)."""
    v = [0] * n
    for i in idx:
        if i > 0:
            v[i - 1] += 1
        else:
            v[-i - 1] -= 1
    return v


def at(f, n, *args):
    """Evaluate f at the sums of variables given by each tuple in args."""
    return f.substitute_linear([_vec(n, a) for a in args], n)


def _comp(t, r):
    if isinstance(t, DepthTuple):
        return t[r]
    return t[r] if r in t else RatFn.const(r, 0)


# ---------------------------------------------------------------------------
# shuffle and stuffle modulo products


def shuffle_residual(f, d):
    """Displayed shuffle sum in depth 2 or 3 (splitting 1 | d-1)."""
    if d == 2:
        return ratsum([at(f, 2, (1,), (1, 2)), at(f, 2, (2,), (1, 2))], 2)
    if d == 3:
        return ratsum([at(f, 3, (1,), (1, 2), (1, 2, 3)),
                       at(f, 3, (2,), (1, 2), (1, 2, 3)),
                       at(f, 3, (2,), (2, 3), (1, 2, 3))], 3)
    raise ValueError("displayed shuffle equations exist in depth 2 and 3")


def shuffles(u, v):
    if not u:
        yield tuple(v)
        return
    if not v:
        yield tuple(u)
        return
    for rest in shuffles(u[1:], v):
        yield (u[0],) + rest
    for rest in shuffles(u, v[1:]):
        yield (v[0],) + rest


def shuffle_residuals_all(f, d):
    """Shuffle sums for every splitting i | d-i, evaluated at partial sums."""
    out = []
    for i in range(1, d):
        terms = []
        for w in shuffles(tuple(range(1, i + 1)), tuple(range(i + 1, d + 1))):
            args = [tuple(w[:k + 1]) for k in range(d)]
            terms.append(at(f, d, *args))
        out.append(ratsum(terms, d))
    return out


def linear_stuffle_residuals_all(f, d):
    """Linearized stuffle sums for every splitting (depth-lowering terms dropped)."""
    if d == 1:
        return [f - at(f, 1, (-1,))]
    out = []
    for i in range(1, d):
        terms = [at(f, d, *[(k,) for k in w])
                 for w in shuffles(tuple(range(1, i + 1)), tuple(range(i + 1, d + 1)))]
        out.append(ratsum(terms, d))
    return out


def shuffle_defect(t, depth):
    return DefectReport(SHUFFLE, depth, shuffle_residual(_comp(t, depth), depth))


def _diff_quotient(num, n, i, j):
    """num / (x_i - x_j), checked for exact divisibility of the polynomial part."""
    return num.divide_by_form(_vec(n, (i, -j)))


def stuffle_mod_products_residual(t, depth):
    if depth == 2:
        f1, f2 = _comp(t, 1), _comp(t, 2)
        lhs = ratsum([f2, at(f2, 2, (2,), (1,))], 2)
        rhs = _diff_quotient(at(f1, 2, (1,)) - at(f1, 2, (2,)), 2, 2, 1)
        return lhs - rhs
    if depth == 3:
        f2, f3 = _comp(t, 2), _comp(t, 3)
        lhs = ratsum([f3, at(f3, 3, (2,), (1,), (3,)), at(f3, 3, (2,), (3,), (1,))], 3)
        q1 = _diff_quotient(at(f2, 3, (2,), (1,)) - at(f2, 3, (2,), (3,)), 3, 3, 1)
        q2 = _diff_quotient(at(f2, 3, (1,), (3,)) - at(f2, 3, (2,), (3,)), 3, 2, 1)
        return lhs - ratsum([q1, q2], 3)
    raise ValueError("stuffle equations are displayed in depth 2 and 3")


def stuffle_defect_mod_products(t, depth):
    return DefectReport(STUFFLE_MOD_PRODUCTS, depth, stuffle_mod_products_residual(t, depth))


def linearized_residual(f, depth):
    """f(x) - f(-x) (evenness); f(x1,x2) + f(x2,x1); or the displayed 3-cycle sum."""
    if depth == 1:
        return f - at(f, 1, (-1,))
    if depth == 2:
        return ratsum([f, at(f, 2, (2,), (1,))], 2)
    if depth == 3:
        return ratsum([f, at(f, 3, (2,), (1,), (3,)), at(f, 3, (2,), (3,), (1,))], 3)
    raise ValueError("linearized equations are displayed in depth 1 to 3")


def linearized_defects(t, depth):
    return DefectReport(LINEARIZED_STUFFLE, depth, linearized_residual(_comp(t, depth), depth))


# ---------------------------------------------------------------------------
# full double shuffle for weight-truncated series


def b_minus_pole(max_degree):
    """b(x) - 1/x as a polynomial in one variable, up to the given degree."""
    terms = {}
    n = 1
    while 2 * n - 1 <= max_degree:
        terms[(2 * n - 1,)] = bfact(2 * n)
        n += 1
    return RatFn.poly(MPoly(1, terms))


def stuffle_regularized(t, weight):
    """f*1 = f1, f*2 = f2 + 1/48, f*3 = f3 - (1/96)(b(x1) - 1/x1)."""
    f1, f2, f3 = _comp(t, 1), _comp(t, 2), _comp(t, 3)
    corr = b_minus_pole(weight).substitute_linear([[1, 0, 0]], 3).scale(Q(1, 96))
    return {1: f1, 2: f2 + Q(1, 48), 3: f3 - corr}


def full_shuffle_residual(t, depth):
    f1, f2, f3 = _comp(t, 1), _comp(t, 2), _comp(t, 3)
    if depth == 2:
        return shuffle_residual(f2, 2) - at(f1, 2, (1,)) * at(f1, 2, (2,))
    if depth == 3:
        return shuffle_residual(f3, 3) - at(f1, 3, (1,)) * at(f2, 3, (2,), (2, 3))
    raise ValueError("full equations are displayed in depth 2 and 3")


def full_stuffle_residual(fs, depth):
    """fs: stuffle-regularized components {1: f*1, 2: f*2, 3: f*3}."""
    g1, g2, g3 = fs[1], fs[2], fs[3]
    if depth == 2:
        lhs = ratsum([g2, at(g2, 2, (2,), (1,))], 2)
        q = _diff_quotient(at(g1, 2, (1,)) - at(g1, 2, (2,)), 2, 2, 1)
        return lhs - q - at(g1, 2, (1,)) * at(g1, 2, (2,))
    if depth == 3:
        lhs = ratsum([g3, at(g3, 3, (2,), (1,), (3,)), at(g3, 3, (2,), (3,), (1,))], 3)
        q1 = _diff_quotient(at(g2, 3, (2,), (1,)) - at(g2, 3, (2,), (3,)), 3, 3, 1)
        q2 = _diff_quotient(at(g2, 3, (1,), (3,)) - at(g2, 3, (2,), (3,)), 3, 2, 1)
        prod = at(g1, 3, (1,)) * at(g2, 3, (2,), (3,))
        return lhs - ratsum([q1, q2, prod], 3)
    raise ValueError("full equations are displayed in depth 2 and 3")


def full_ds_defect(t, depth, weight, flavor=FULL_SHUFFLE):
    """Full double shuffle residual, compared up to total weight ``weight``.

    Inputs must be correct through weight ``weight`` in every depth.
    """
    if flavor == FULL_SHUFFLE:
        res = full_shuffle_residual(t, depth)
    elif flavor == FULL_STUFFLE:
        res = full_stuffle_residual(stuffle_regularized(t, weight), depth)
    else:
        raise ValueError("unknown flavor %r" % flavor)
    return DefectReport(flavor, depth, res.truncate(weight - depth))


def semi_homogeneous_residuals(g, weight):
    """Residuals of the semi-homogeneous system for gamma = {1: g1, 2: g2, 3: g3}.

    Returns a dict name -> residual truncated at the weight window.
    """
    g1, g2, g3 = g[1], g[2], g[3]
    g2s = g2 + Q(1, 48)
    g3s = g3 + at(g1, 3, (1,)).scale(Q(1, 48))
    out = {
        "shuffle2": shuffle_residual(g2, 2) - at(g1, 2, (1,)) * at(g1, 2, (2,)),
        "stuffle2": ratsum([g2s, at(g2s, 2, (2,), (1,))], 2) - at(g1, 2, (1,)) * at(g1, 2, (2,)),
        "shuffle3": shuffle_residual(g3, 3) - at(g1, 3, (1,)) * at(g2, 3, (2,), (2, 3)),
        "stuffle3": ratsum([g3s, at(g3s, 3, (2,), (1,), (3,)), at(g3s, 3, (2,), (3,), (1,))], 3)
        - at(g1, 3, (1,)) * at(g2s, 3, (2,), (3,)),
    }
    return {k: v.truncate(weight - int(k[-1])) for k, v in out.items()}


# ---------------------------------------------------------------------------
# polar linearized double shuffle


def allowed_pole_poly(r):
    """Reduced c_r: x1 (x1 - x2) ... (x_{r-1} - x_r) x_r."""
    p = MPoly.linear(_vec(r, (1,)))
    for i in range(1, r):
        p = p * MPoly.linear(_vec(r, (i, -(i + 1))))
    return p * MPoly.linear(_vec(r, (r,)))


def pls_member(t):
    """Linearized double shuffle in every depth, with poles bounded by reduced c_r."""
    for r in t.depths():
        f = t[r]
        if not (f * allowed_pole_poly(r)).is_polynomial():
            return False
        if r == 1:
            if not linearized_residual(f, 1).is_zero():
                return False
            continue
        if any(not x.is_zero() for x in shuffle_residuals_all(f, r)):
            return False
        if any(not x.is_zero() for x in linear_stuffle_residuals_all(f, r)):
            return False
    return True


# ---------------------------------------------------------------------------
# dimensions


def monomials(d, deg):
    """Exponent vectors of total degree deg in d variables, graded reverse-lex stable order."""
    if d == 1:
        return [(deg,)]
    out = []
    for a in range(deg, -1, -1):
        for rest in monomials(d - 1, deg - a):
            out.append((a,) + rest)
    return out


def ls_system(d, n):
    """Linear system of the linearized double shuffle equations in depth d, weight n."""
    from .linalg import LinSystem

    mons = monomials(d, n - d)
    system = LinSystem(mons)
    images = {}
    for m in mons:
        f = RatFn.poly(MPoly(d, {m: Q(1)}))
        if d == 1:
            eqs = linear_stuffle_residuals_all(f, 1)
        else:
            eqs = shuffle_residuals_all(f, d) + linear_stuffle_residuals_all(f, d)
        images[m] = eqs
    neq = len(next(iter(images.values())))
    for k in range(neq):
        rows = {}
        for m in mons:
            for e, c in images[m][k].num.terms.items():
                rows.setdefault(e, {})[m] = c
        for e in sorted(rows):
            system.add_row(rows[e])
    return system


def ls_dimension(d, n):
    if d < 1 or n < d:
        return 0
    return len(ls_system(d, n).nullspace())


def ls_basis(d, n):
    """Basis of solutions as reduced polynomials."""
    mons = monomials(d, n - d)
    return [RatFn.poly(MPoly(d, dict(v))) for v in ls_system(d, n).nullspace(len(mons))]
