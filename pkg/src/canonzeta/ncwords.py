"""Noncommutative polynomials in two letters and derivations of the free Lie algebra.

Genus zero words use the letters ``"0"`` and ``"1"`` (for x0, x1).  Genus one
words use ``"a"`` and ``"b"``.  In both cases the second letter is the
counting letter: depth for genus zero and B-degree for genus one.
"""

from .exactnum import ZERO, Q, q_str, to_q


class Alphabet:
    __slots__ = ("genus", "letters")

    def __init__(self, genus, letters):
        self.genus = genus
        self.letters = letters

    @property
    def first(self):
        return self.letters[0]

    @property
    def second(self):
        return self.letters[1]

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "Alphabet(%s)" % self.genus


GENUS0 = Alphabet("genus0", ("0", "1"))
GENUS1 = Alphabet("genus1", ("a", "b"))


def alphabet_of(word):
    for ch in word:
        if ch in "01":
            return GENUS0
        if ch in "ab":
            return GENUS1
    return None


def word_key(w):
    return (len(w), w)


class NCPoly:
    """A finite rational linear combination of words."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet, terms=None):
        self.alphabet = alphabet
        self.terms = {}
        if terms:
            for w, c in terms.items():
                c = to_q(c)
                if c:
                    self.terms[w] = c

    @classmethod
    def _raw(cls, alphabet, terms):
        p = cls.__new__(cls)
        p.alphabet = alphabet
        p.terms = terms
        return p

    @classmethod
    def word(cls, w, alphabet=None, coeff=1):
        alphabet = alphabet or alphabet_of(w) or GENUS0
        return cls(alphabet, {w: coeff})

    @classmethod
    def letter(cls, alphabet, i):
        return cls._raw(alphabet, {alphabet.letters[i]: Q(1)})

    @classmethod
    def zero(cls, alphabet):
        return cls._raw(alphabet, {})

    @classmethod
    def one(cls, alphabet):
        return cls._raw(alphabet, {"": Q(1)})

    def _check(self, other):
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch: %r vs %r" % (self.alphabet, other.alphabet))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            v = t.get(w, ZERO) + c
            if v:
                t[w] = v
            else:
                t.pop(w, None)
        return NCPoly._raw(self.alphabet, t)

    def __neg__(self):
        return NCPoly._raw(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = to_q(c)
        if not c:
            return NCPoly.zero(self.alphabet)
        return NCPoly._raw(self.alphabet, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return concat(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coeff(self, w):
        return self.terms.get(w, ZERO)

    def weights(self):
        return {len(w) for w in self.terms}

    def counting_degrees(self):
        s = self.alphabet.second
        return {w.count(s) for w in self.terms}

    def weight_part(self, n):
        return NCPoly._raw(self.alphabet, {w: c for w, c in self.terms.items() if len(w) == n})

    def counting_part(self, r):
        s = self.alphabet.second
        return NCPoly._raw(self.alphabet, {w: c for w, c in self.terms.items() if w.count(s) == r})

    def truncate(self, max_weight=None, max_count=None):
        s = self.alphabet.second
        return NCPoly._raw(self.alphabet, {
            w: c for w, c in self.terms.items()
            if (max_weight is None or len(w) <= max_weight)
            and (max_count is None or w.count(s) <= max_count)})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda it: word_key(it[0]))

    def to_json(self):
        return [[w, q_str(c)] for w, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, alphabet=None):
        terms = {w: to_q(c) for w, c in data}
        if alphabet is None:
            alphabet = next((alphabet_of(w) for w in terms if alphabet_of(w)), GENUS0)
        return cls(alphabet, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("%s*%s" % (q_str(c), w or "1") for w, c in self.sorted_terms())


def concat(p, q):
    p._check(q)
    t = {}
    for w1, c1 in p.terms.items():
        for w2, c2 in q.terms.items():
            w = w1 + w2
            v = t.get(w, ZERO) + c1 * c2
            if v:
                t[w] = v
            else:
                t.pop(w, None)
    return NCPoly._raw(p.alphabet, t)


def lie_bracket(p, q):
    return concat(p, q) - concat(q, p)


def ad_pow(p, k, q):
    for _ in range(k):
        q = lie_bracket(p, q)
    return q


def star(p):
    """(a_1...a_n)* = (-1)^n a_n...a_1."""
    return NCPoly._raw(p.alphabet, {w[::-1]: (-c if len(w) % 2 else c) for w, c in p.terms.items()})


def dynkin(p):
    """Left-normed bracketing [[..[a1,a2],..],an], applied linearly.

    Computed by peeling off the last letter, so that intermediate results stay
    inside the span of words of fixed length and letter content.
    """
    if not p.terms:
        return p
    by_len = {}
    for w, c in p.terms.items():
        by_len.setdefault(len(w), {})[w] = c
    out = NCPoly.zero(p.alphabet)
    for n, terms in by_len.items():
        out = out + _dynkin_hom(p.alphabet, terms, n)
    return out


def _dynkin_hom(alphabet, terms, n):
    if n <= 1:
        return NCPoly._raw(alphabet, dict(terms))
    groups = {}
    for w, c in terms.items():
        groups.setdefault(w[-1], {})[w[:-1]] = c
    out = {}
    for letter, sub in groups.items():
        inner = _dynkin_hom(alphabet, sub, n - 1)
        for w, c in inner.terms.items():
            for u, s in ((w + letter, c), (letter + w, -c)):
                v = out.get(u, ZERO) + s
                if v:
                    out[u] = v
                else:
                    out.pop(u, None)
    return NCPoly._raw(alphabet, out)


def is_lie(p):
    """Dynkin criterion: homogeneous p of weight n >= 1 is Lie iff dynkin(p) = n p."""
    ws = p.weights()
    if not ws:
        return True
    if len(ws) != 1:
        raise ValueError("is_lie expects a weight-homogeneous polynomial")
    n = ws.pop()
    if n == 0:
        return False
    return dynkin(p) == p.scale(n)


def is_lie_graded(p):
    """Lie membership for a possibly inhomogeneous p, weight by weight."""
    return all(is_lie(p.weight_part(n)) for n in p.weights())


# ---------------------------------------------------------------------------
# derivations

KILLS_SECOND = "kills_second"
KILLS_COMMUTATOR = "kills_commutator"
NO_TAG = "none"


class Derivation:
    """A derivation of the free algebra given by the images of the two letters."""

    __slots__ = ("alphabet", "image_first", "image_second", "annihilator_tag")

    def __init__(self, alphabet, image_first, image_second=None, annihilator_tag=NO_TAG, check=True):
        self.alphabet = alphabet
        self.image_first = image_first
        self.image_second = NCPoly.zero(alphabet) if image_second is None else image_second
        self.annihilator_tag = annihilator_tag
        if check:
            if annihilator_tag == KILLS_SECOND and self.image_second:
                raise ValueError("derivation tagged kills_second has a nonzero second image")
            if annihilator_tag == KILLS_COMMUTATOR:
                a = NCPoly.letter(alphabet, 0)
                b = NCPoly.letter(alphabet, 1)
                theta = lie_bracket(a, b)
                if apply_derivation(self, theta):
                    raise ValueError("derivation does not annihilate the commutator")

    def image(self, letter):
        return self.image_first if letter == self.alphabet.first else self.image_second

    def is_zero(self):
        return not self.image_first and not self.image_second

    def __add__(self, other):
        return Derivation(self.alphabet, self.image_first + other.image_first,
                          self.image_second + other.image_second,
                          _common_tag(self, other), check=False)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return Derivation(self.alphabet, self.image_first.scale(c), self.image_second.scale(c),
                          self.annihilator_tag, check=False)

    def __eq__(self, other):
        return (isinstance(other, Derivation) and self.image_first == other.image_first
                and self.image_second == other.image_second)

    def __repr__(self):
        f, s = self.alphabet.letters
        return "Derivation(%s -> %r, %s -> %r)" % (f, self.image_first, s, self.image_second)


def _common_tag(d1, d2):
    return d1.annihilator_tag if d1.annihilator_tag == d2.annihilator_tag else NO_TAG


def apply_derivation(d, p, weight_cutoff=None):
    """Leibniz extension of the generator images, dropping weights above the cutoff."""
    images = {d.alphabet.first: d.image_first.terms, d.alphabet.second: d.image_second.terms}
    out = {}
    for w, c in p.terms.items():
        for i, letter in enumerate(w):
            img = images[letter]
            if not img:
                continue
            pre, post = w[:i], w[i + 1:]
            for u, cu in img.items():
                if weight_cutoff is not None and len(w) - 1 + len(u) > weight_cutoff:
                    continue
                word = pre + u + post
                v = out.get(word, ZERO) + c * cu
                if v:
                    out[word] = v
                else:
                    out.pop(word, None)
    return NCPoly._raw(p.alphabet, out)


def derivation_bracket(d1, d2, weight_cutoff=None):
    """[d1, d2] = d1 d2 - d2 d1."""
    def img(x2, x1):
        return apply_derivation(d1, x2, weight_cutoff) - apply_derivation(d2, x1, weight_cutoff)

    first = img(d2.image_first, d1.image_first)
    second = img(d2.image_second, d1.image_second)
    return Derivation(d1.alphabet, first, second, _common_tag(d1, d2), check=False)


def x0():
    return NCPoly.letter(GENUS0, 0)


def x1():
    return NCPoly.letter(GENUS0, 1)


def letter_a():
    return NCPoly.letter(GENUS1, 0)


def letter_b():
    return NCPoly.letter(GENUS1, 1)
