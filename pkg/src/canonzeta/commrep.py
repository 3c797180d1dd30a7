"""Commutative encodings of noncommutative words.

A word x0^{i0} x1 x0^{i1} ... x1 x0^{ir} is sent to the monomial
y0^{i0} ... yr^{ir}.  The same rule applies to genus one words, with a
playing the role of x0 and b the role of x1.  Translation-invariant functions
of y0..yr are stored in reduced form, by setting y0 = 0 and yi = xi.
"""

import json

from .exactnum import Q, q_str, to_q
from .ncwords import (GENUS0, KILLS_COMMUTATOR, KILLS_SECOND, NCPoly, apply_derivation)
from .polys import MPoly, RatFn, form_name, normalize_form, parse_form, ratsum


def _as_rat(f):
    return RatFn.poly(f) if isinstance(f, MPoly) else f


# ---------------------------------------------------------------------------
# rho and its inverse


def word_exponents(w, first):
    exps = [0]
    for ch in w:
        if ch == first:
            exps[-1] += 1
        else:
            exps.append(0)
    return tuple(exps)


def rho(p, r=None):
    """Monomial encoding of a polynomial homogeneous in the counting letter."""
    first = p.alphabet.first
    degs = p.counting_degrees()
    if len(degs) > 1:
        raise ValueError("rho expects a polynomial of a single counting degree, got %s" % sorted(degs))
    if r is None:
        r = degs.pop() if degs else 0
    elif degs and degs != {r}:
        raise ValueError("rho: counting degree %s differs from %d" % (degs, r))
    terms = {}
    for w, c in p.terms.items():
        e = word_exponents(w, first)
        terms[e] = terms.get(e, 0) + c
    return MPoly(r + 1, terms)


def rho_inv(f, r=None, alphabet=GENUS0):
    if isinstance(f, RatFn):
        f = f.as_poly()
    if r is None:
        r = f.nvars - 1
    a, b = alphabet.letters
    terms = {}
    for e, c in f.terms.items():
        terms[b.join(a * k for k in e)] = c
    return NCPoly(alphabet, terms)


# ---------------------------------------------------------------------------
# reduction to the x-frame


def is_translation_invariant(f):
    f = _as_rat(f)
    n = f.nvars
    total = f.diff(0)
    for i in range(1, n):
        total = total + f.diff(i)
    return total.is_zero()


def _reduce_vecs(r):
    # y0 -> 0, yi -> xi
    vecs = [[0] * r]
    for i in range(r):
        v = [0] * r
        v[i] = 1
        vecs.append(v)
    return vecs


def _unreduce_vecs(r):
    # xi -> yi - y0
    vecs = []
    for i in range(r):
        v = [0] * (r + 1)
        v[0] = -1
        v[i + 1] = 1
        vecs.append(v)
    return vecs


def reduce(f, check=True):
    """Set (y0, ..., yr) = (0, x1, ..., xr)."""
    is_poly = isinstance(f, MPoly)
    g = _as_rat(f)
    if check and not is_translation_invariant(g):
        raise ValueError("not translation invariant")
    r = g.nvars - 1
    out = g.substitute_linear(_reduce_vecs(r), r)
    return out.num if is_poly else out


def unreduce(f):
    """Inverse of reduce: substitute xi = yi - y0."""
    is_poly = isinstance(f, MPoly)
    g = _as_rat(f)
    r = g.nvars
    out = g.substitute_linear(_unreduce_vecs(r), r + 1)
    return out.num if is_poly else out


# ---------------------------------------------------------------------------
# the maps rho', ell and ell'


def y_diff(r, i, j):
    v = [0] * (r + 1)
    v[i] += 1
    v[j] -= 1
    return v


def ell_forms(r):
    """Factors y_{i-1} - y_i of ell_r."""
    return [y_diff(r, i - 1, i) for i in range(1, r + 1)]


def c_forms(r):
    return ell_forms(r) + [y_diff(r, 0, r)]


def rho_prime(d):
    """DepthTuple of rho(depth-r part of d(x0)) / (y0 - yr), in reduced form."""
    if d.annihilator_tag != KILLS_SECOND and d.image_second:
        raise ValueError("rho_prime needs a derivation killing x1")
    img = d.image_first
    comps = {}
    for r in sorted(img.counting_degrees()):
        if r == 0:
            raise ValueError("image of x0 has a depth-zero part")
        f = RatFn(rho(img.counting_part(r), r)).divide_by_form(y_diff(r, 0, r))
        comps[r] = reduce(f)
    return DepthTuple(comps)


def ell(p):
    """rho(p) / ell_r on each B-degree component; returns dict r -> y-frame RatFn."""
    out = {}
    for r in sorted(p.counting_degrees()):
        f = RatFn(rho(p.counting_part(r), r))
        for v in ell_forms(r):
            f = f.divide_by_form(v)
        out[r] = f
    return out


def ell_prime(d, reduced=True):
    """rho(d(a)) / c_r on each B-degree component."""
    if d.alphabet == GENUS0:
        raise ValueError("ell_prime is defined on genus one derivations")
    a = d.alphabet.first
    if d.image_second.coeff(a):
        raise ValueError("derivation is not in B^0: d(b) has a nonzero coefficient of a")
    img = d.image_first
    comps = {}
    for r in sorted(img.counting_degrees()):
        if r == 0:
            raise ValueError("d(a) has a B-degree zero part")
        f = RatFn(rho(img.counting_part(r), r))
        for v in c_forms(r):
            f = f.divide_by_form(v)
        comps[r] = reduce(f) if reduced else f
    return DepthTuple(comps) if reduced else comps


def residue(f, form):
    """Residue of f along the hyperplane form = 0, eliminating its leading variable.

    For the form x_k (or x_i - x_k with k the last variable involved) this
    multiplies by the form and substitutes x_k by the value on the hyperplane.
    The result lives in the same variables with x_k absent.
    """
    f = _as_rat(f)
    vec, g = normalize_form(form)
    m = f.den.get(vec, 0)
    if m == 0:
        return RatFn.const(f.nvars, 0)
    if m > 1:
        raise ValueError("pole of order %d along %s" % (m, form_name(vec)))
    k = max(i for i, c in enumerate(vec) if c)
    ck = vec[k]
    den = dict(f.den)
    del den[vec]
    h = RatFn(f.num, den, reduce=False)
    # x_k = -(sum_{i != k} vec_i x_i) / ck ; using rational images
    n = f.nvars
    images = []
    for i in range(n):
        if i == k:
            images.append(MPoly.linear([(-c if j != k else 0) for j, c in enumerate(vec)]).scale(Q(1) / ck))
        else:
            images.append(MPoly.var(n, i))
    num = h.num.substitute(images, n)
    out = RatFn(num, {}, reduce=False)
    for v, mult in h.den.items():
        lin = MPoly.linear(v).substitute(images, n)
        vec2 = [lin.coeff(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]
        lcm_den = 1
        for c in vec2:
            lcm_den = lcm_den * c.denominator // _gcd(lcm_den, c.denominator)
        ivec = [int(c * lcm_den) for c in vec2]
        for _ in range(mult):
            out = out.divide_by_form(ivec).scale(lcm_den)
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


# ---------------------------------------------------------------------------
# depth tuples


class DepthTuple:
    """Reduced rational functions indexed by depth."""

    def __init__(self, components=None, weight=None, normalization=None):
        self.components = {}
        for r, f in (components or {}).items():
            f = _as_rat(f)
            if f.nvars != r:
                raise ValueError("component of depth %d uses %d variables" % (r, f.nvars))
            if f:
                self.components[r] = f
        self.weight = weight
        self.normalization = normalization

    def __getitem__(self, r):
        return self.components.get(r, RatFn.const(r, 0))

    def depths(self):
        return sorted(self.components)

    def max_depth(self):
        return max(self.components) if self.components else 0

    def _combine(self, other, sign):
        out = dict(self.components)
        for r, f in other.components.items():
            out[r] = out[r] + f.scale(sign) if r in out else f.scale(sign)
        w = self.weight if self.weight == other.weight else None
        return DepthTuple(out, w, self.normalization if self.normalization == other.normalization else None)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return DepthTuple({r: f.scale(c) for r, f in self.components.items()}, self.weight, self.normalization)

    def truncate_depth(self, max_depth):
        return DepthTuple({r: f for r, f in self.components.items() if r <= max_depth},
                          self.weight, self.normalization)

    def is_zero(self):
        return not self.components

    def __eq__(self, other):
        if not isinstance(other, DepthTuple):
            return NotImplemented
        return (self - other).is_zero()

    def is_polynomial(self):
        return all(f.is_polynomial() for f in self.components.values())

    def to_dict(self):
        comps = []
        for r in self.depths():
            f = self.components[r]
            comps.append({
                "depth": r,
                "numerator": [[list(e), q_str(c)] for e, c in f.num.sorted_terms()],
                "denominator": [form_name(v) for v, m in sorted(f.den.items()) for _ in range(m)],
            })
        return {"weight": self.weight, "normalization": self.normalization, "components": comps}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data):
        comps = {}
        for c in data["components"]:
            r = c["depth"]
            num = MPoly(r, {tuple(e): to_q(v) for e, v in c["numerator"]})
            den = {}
            scale = Q(1)
            for name in c["denominator"]:
                f, g = parse_form(name, r)
                scale *= g
                den[f] = den.get(f, 0) + 1
            comps[r] = RatFn(num.scale(1 / scale), den)
        return cls(comps, data.get("weight"), data.get("normalization"))

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return "DepthTuple(%r)" % self.components


def x_poly(r, terms):
    """Convenience: polynomial in x1..xr from {exponent tuple: coefficient}."""
    return MPoly(r, {tuple(e): to_q(c) for e, c in terms.items()})


def x_var(r, i):
    """x_i (1-based) in r variables."""
    return MPoly.var(r, i - 1)


def x_form(r, *pairs):
    """Linear form from (index, coefficient) pairs with 1-based indices."""
    v = [0] * r
    for i, c in pairs:
        v[i - 1] += c
    return v


def x_power(r, i, k):
    """x_i^k as a RatFn (k may be negative)."""
    v = [0] * r
    v[i - 1] = 1
    if k >= 0:
        return RatFn.poly(MPoly.var(r, i - 1) ** k)
    return RatFn.const(r, 1).divide_by_form(v, -k)


__all__ = [
    "rho", "rho_inv", "reduce", "unreduce", "is_translation_invariant", "rho_prime",
    "ell", "ell_prime", "residue", "DepthTuple", "ratsum", "KILLS_COMMUTATOR",
    "apply_derivation",
]
