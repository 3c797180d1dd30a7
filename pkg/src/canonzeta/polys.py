"""Sparse multivariate polynomials and rational functions with linear denominators.

A polynomial in ``n`` variables is a dict from exponent tuples to rationals.
Rational functions are a polynomial numerator over a product of linear forms.
Linear forms are primitive integer vectors whose first nonzero entry is
positive, so every pole has a unique label.
"""

from math import gcd

from .exactnum import ZERO, Q, to_q


# ---------------------------------------------------------------------------
# polynomials


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        if terms is None:
            terms = {}
        self.terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def const(cls, nvars, c):
        c = to_q(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Q(1)})

    @classmethod
    def linear(cls, vec):
        """The linear polynomial sum vec[i] * x_i."""
        n = len(vec)
        terms = {}
        for i, c in enumerate(vec):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = Q(c)
        return cls._raw(n, terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def copy(self):
        return MPoly._raw(self.nvars, dict(self.terms))

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e)
            if v is None:
                t[e] = c
            else:
                v = v + c
                if v:
                    t[e] = v
                else:
                    del t[e]
        return MPoly._raw(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = to_q(c)
        if not c:
            return MPoly._raw(self.nvars, {})
        return MPoly._raw(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        t = {}
        get = t.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                v = get(e)
                t[e] = c1 * c2 if v is None else v + c1 * c2
        return MPoly._raw(self.nvars, {e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        out = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars if hasattr(self, "nvars") else 0, other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degrees(self):
        return {sum(e) for e in self.terms}

    def total_degree(self):
        return max(sum(e) for e in self.terms) if self.terms else -1

    def homogeneous_part(self, d):
        return MPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def truncate(self, maxdeg):
        return MPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) <= maxdeg})

    def coeff(self, e):
        return self.terms.get(tuple(e), ZERO)

    def diff(self, i):
        t = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                f = list(e)
                f[i] = k - 1
                t[tuple(f)] = c * k
        return MPoly._raw(self.nvars, t)

    def substitute(self, images, nvars_out, _cache=None):
        """Substitute x_i -> images[i] (each an MPoly in nvars_out variables)."""
        cache = {} if _cache is None else _cache
        out = {}
        one = MPoly.const(nvars_out, 1)

        def power(i, k):
            key = (i, k)
            p = cache.get(key)
            if p is None:
                if k == 0:
                    p = one
                elif k == 1:
                    p = images[i]
                else:
                    p = power(i, k // 2) * power(i, k - k // 2)
                cache[key] = p
            return p

        for e, c in self.terms.items():
            m = None
            for i, k in enumerate(e):
                if k:
                    p = power(i, k)
                    m = p if m is None else m * p
            if m is None:
                m = one
            for f, v in m.terms.items():
                w = out.get(f)
                out[f] = c * v if w is None else w + c * v
        return MPoly._raw(nvars_out, {e: c for e, c in out.items() if c})

    def linear_substitute(self, vecs, nvars_out):
        """Substitute x_i -> sum_j vecs[i][j] y_j."""
        return self.substitute([MPoly.linear(v) for v in vecs], nvars_out)

    def divide_linear(self, form):
        """Exact quotient by the linear form ``form`` (an int vector), or None."""
        k = next(i for i, c in enumerate(form) if c)
        ck = Q(form[k])
        rest = [(i, c) for i, c in enumerate(form) if c and i != k]
        # group by exponent of x_k
        groups = {}
        top = 0
        for e, c in self.terms.items():
            j = e[k]
            if j > top:
                top = j
            f = e[:k] + (0,) + e[k + 1:]
            groups.setdefault(j, {})[f] = c
        if not self.terms:
            return MPoly._raw(self.nvars, {})
        quot = {}
        b = {}  # current B_j (coefficient of x_k^j in quotient, as dict without x_k)
        for j in range(top, 0, -1):
            a = dict(groups.get(j, {}))
            # a - M * b_prev
            for f, c in b.items():
                for i, ci in rest:
                    g = list(f)
                    g[i] += 1
                    g = tuple(g)
                    v = a.get(g, ZERO) - ci * c
                    if v:
                        a[g] = v
                    else:
                        a.pop(g, None)
            b = {f: c / ck for f, c in a.items()}
            for f, c in b.items():
                g = list(f)
                g[k] = j - 1
                quot[tuple(g)] = c
        rem = dict(groups.get(0, {}))
        for f, c in b.items():
            for i, ci in rest:
                g = list(f)
                g[i] += 1
                g = tuple(g)
                v = rem.get(g, ZERO) - ci * c
                if v:
                    rem[g] = v
                else:
                    rem.pop(g, None)
        if rem:
            return None
        return MPoly._raw(self.nvars, quot)

    def evaluate(self, point):
        s = ZERO
        for e, c in self.terms.items():
            m = c
            for x, k in zip(point, e):
                if k:
                    m *= Q(x) ** k
            s += m
        return s

    def extend(self, nvars, positions=None):
        """Embed into more variables; variable i goes to positions[i]."""
        if positions is None:
            positions = list(range(self.nvars))
        t = {}
        for e, c in self.terms.items():
            f = [0] * nvars
            for i, k in enumerate(e):
                f[positions[i]] += k
            t[tuple(f)] = c
        return MPoly._raw(nvars, t)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda it: (sum(it[0]), tuple(-x for x in it[0])))

    def __repr__(self):
        return "MPoly(%d, %r)" % (self.nvars, self.sorted_terms())


# ---------------------------------------------------------------------------
# linear forms


def normalize_form(vec):
    """Return (primitive form, scale) with vec = scale * form."""
    vec = tuple(int(c) for c in vec)
    g = 0
    for c in vec:
        g = gcd(g, c)
    if g == 0:
        raise ZeroDivisionError("zero linear form")
    first = next(c for c in vec if c)
    if first < 0:
        g = -g
    return tuple(c // g for c in vec), g


def form_name(form, letter="x", offset=1):
    parts = []
    for i, c in enumerate(form):
        if not c:
            continue
        name = "%s%d" % (letter, i + offset)
        if c == 1:
            s = "+" + name
        elif c == -1:
            s = "-" + name
        else:
            s = "%+d*%s" % (c, name)
        parts.append(s)
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


def parse_form(text, nvars, letter="x", offset=1):
    import re

    vec = [0] * nvars
    s = text.replace(" ", "")
    if not s.startswith(("+", "-")):
        s = "+" + s
    for sign, coef, idx in re.findall(r"([+-])(?:(\d+)\*)?%s(\d+)" % letter, s):
        c = int(coef) if coef else 1
        vec[int(idx) - offset] += c if sign == "+" else -c
    return normalize_form(vec)


# ---------------------------------------------------------------------------
# rational functions


class RatFn:
    """numerator / prod(form ** mult) with primitive integer linear forms."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        self.num = num
        self.den = {} if den is None else {f: m for f, m in den.items() if m}
        if reduce:
            self._reduce()

    @property
    def nvars(self):
        return self.num.nvars

    @classmethod
    def poly(cls, p):
        return cls(p, {}, reduce=False)

    @classmethod
    def const(cls, nvars, c):
        return cls(MPoly.const(nvars, c), {}, reduce=False)

    @classmethod
    def from_forms(cls, num, forms):
        """num / prod(forms), where forms are arbitrary nonzero int vectors."""
        den = {}
        scale = Q(1)
        for v in forms:
            f, g = normalize_form(v)
            scale *= g
            den[f] = den.get(f, 0) + 1
        if not isinstance(num, MPoly):
            num = MPoly.const(len(forms[0]), num)
        return cls(num.scale(1 / scale), den)

    def _reduce(self):
        if not self.num.terms:
            self.den = {}
            return
        for f in list(self.den):
            m = self.den[f]
            while m:
                q = self.num.divide_linear(f)
                if q is None:
                    break
                self.num = q
                m -= 1
            if m:
                self.den[f] = m
            else:
                del self.den[f]

    def is_zero(self):
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def is_polynomial(self):
        return not self.den

    def den_degree(self):
        return sum(self.den.values())

    def den_poly(self):
        p = MPoly.const(self.nvars, 1)
        for f, m in self.den.items():
            p = p * MPoly.linear(f) ** m
        return p

    def _over(self, den):
        """Numerator rewritten over the (larger) denominator ``den``."""
        extra = MPoly.const(self.nvars, 1)
        for f, m in den.items():
            k = m - self.den.get(f, 0)
            if k:
                extra = extra * MPoly.linear(f) ** k
        return self.num * extra

    def __add__(self, other):
        if not isinstance(other, RatFn):
            if isinstance(other, MPoly):
                other = RatFn.poly(other)
            else:
                other = RatFn.const(self.nvars, other)
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den == other.den:
            return RatFn(self.num + other.num, self.den)
        den = dict(self.den)
        for f, m in other.den.items():
            if den.get(f, 0) < m:
                den[f] = m
        return RatFn(self._over(den) + other._over(den), den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        if not isinstance(other, RatFn):
            if isinstance(other, MPoly):
                other = RatFn.poly(other)
            else:
                other = RatFn.const(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return RatFn(self.num.scale(c), self.den, reduce=False)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            other = RatFn.poly(other)
        if not isinstance(other, RatFn):
            return self.scale(other)
        den = dict(self.den)
        for f, m in other.den.items():
            den[f] = den.get(f, 0) + m
        return RatFn(self.num * other.num, den)

    __rmul__ = __mul__

    def divide_by_form(self, vec, power=1):
        f, g = normalize_form(vec)
        den = dict(self.den)
        den[f] = den.get(f, 0) + power
        return RatFn(self.num.scale(Q(1) / Q(g) ** power), den)

    def multiply_by_form(self, vec, power=1):
        return RatFn(self.num * MPoly.linear(vec) ** power, self.den)

    def __eq__(self, other):
        if isinstance(other, (int, Q)) or not isinstance(other, (RatFn, MPoly)):
            try:
                other = RatFn.const(self.nvars, other)
            except TypeError:
                return NotImplemented
        if isinstance(other, MPoly):
            other = RatFn.poly(other)
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.num, frozenset(self.den.items())))

    def substitute_linear(self, vecs, nvars_out, cache=None):
        """f(L_1, ..., L_r) where L_i = sum_j vecs[i][j] * y_j."""
        images = [MPoly.linear(v) for v in vecs]
        num = self.num.substitute(images, nvars_out, cache)
        den = {}
        scale = Q(1)
        for f, m in self.den.items():
            v = [0] * nvars_out
            for i, c in enumerate(f):
                if c:
                    for j, a in enumerate(vecs[i]):
                        v[j] += c * a
            g_form, g = normalize_form(v)
            scale *= Q(g) ** m
            den[g_form] = den.get(g_form, 0) + m
        if scale != 1:
            num = num.scale(1 / scale)
        return RatFn(num, den)

    def homogeneous_parts(self):
        """dict degree -> homogeneous RatFn (degree = num degree - den degree)."""
        dd = self.den_degree()
        groups = {}
        for e, c in self.num.terms.items():
            groups.setdefault(sum(e) - dd, {})[e] = c
        return {d: RatFn(MPoly._raw(self.nvars, t), self.den) for d, t in groups.items()}

    def degrees(self):
        dd = self.den_degree()
        return sorted({sum(e) - dd for e in self.num.terms})

    def truncate(self, maxdeg):
        dd = self.den_degree()
        return RatFn(self.num.truncate(maxdeg + dd), self.den)

    def homogeneous_part(self, d):
        dd = self.den_degree()
        return RatFn(self.num.homogeneous_part(d + dd), self.den)

    def diff(self, i):
        # quotient rule against prod L^m: d(N/D) = (N' D_red - N * sum m c_i D/L) / ...
        out = RatFn(self.num.diff(i), self.den, reduce=False)
        for f, m in self.den.items():
            if f[i]:
                den = dict(self.den)
                den[f] += 1
                out = out + RatFn(self.num.scale(-m * f[i]), den, reduce=False)
        return RatFn(out.num, out.den)

    def as_poly(self):
        if self.den:
            raise ValueError("rational function has poles: %s" % self.pole_names())
        return self.num

    def pole_names(self, letter="x", offset=1):
        return sorted(form_name(f, letter, offset) for f in self.den)

    def evaluate(self, point):
        d = Q(1)
        for f, m in self.den.items():
            d *= Q(sum(c * Q(x) for c, x in zip(f, point))) ** m
        return self.num.evaluate(point) / d

    def extend(self, nvars, positions=None):
        if positions is None:
            positions = list(range(self.nvars))
        den = {}
        for f, m in self.den.items():
            v = [0] * nvars
            for i, c in enumerate(f):
                v[positions[i]] += c
            den[tuple(v)] = m
        return RatFn(self.num.extend(nvars, positions), den, reduce=False)

    def __repr__(self):
        return "RatFn(%r / %r)" % (self.num.sorted_terms(), self.pole_names())


def ratsum(items, nvars):
    """Sum many rational functions over one common denominator."""
    items = [x for x in items if x.num.terms]
    if not items:
        return RatFn.const(nvars, 0)
    den = {}
    for x in items:
        for f, m in x.den.items():
            if den.get(f, 0) < m:
                den[f] = m
    total = MPoly(nvars)
    for x in items:
        total = total + x._over(den)
    return RatFn(total, den)
