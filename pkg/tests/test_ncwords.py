import itertools
import random

import pytest

from canonzeta.exactnum import Q
from canonzeta.ihara import bracket_words
from canonzeta.ncwords import (GENUS0, GENUS1, KILLS_COMMUTATOR, KILLS_SECOND, Derivation,
                               NCPoly, ad_pow, apply_derivation, concat, derivation_bracket,
                               dynkin, is_lie, lie_bracket, star, x0, x1)


def W(s, alphabet=GENUS0):
    return NCPoly.word(s, alphabet)


def random_lie(rng, weight, alphabet=GENUS0):
    """Random combination of left-normed brackets of letters."""
    out = NCPoly.zero(alphabet)
    letters = [NCPoly.letter(alphabet, 0), NCPoly.letter(alphabet, 1)]
    for _ in range(3):
        p = rng.choice(letters)
        for _ in range(weight - 1):
            p = lie_bracket(p, rng.choice(letters))
        out = out + p.scale(rng.randint(-3, 3))
    return out


def test_concat_examples():
    assert concat(x0(), x1()) == W("01")
    assert concat(x0() + x1(), x0()) == W("00") + W("10")
    assert concat(x0(), NCPoly.zero(GENUS0)).is_zero()


def test_bracket_examples():
    assert lie_bracket(x0(), x1()) == W("01") - W("10")
    assert ad_pow(x0(), 2, x1()) == W("001") - W("010").scale(2) + W("100")
    p = W("01") + W("1").scale(3)
    assert lie_bracket(p, p).is_zero()


def test_star():
    assert star(W("01")) == W("10")
    assert star(W("001")) == -W("100")
    p = W("0110").scale(Q(2, 3)) + W("1")
    assert star(star(p)) == p


def test_lie_membership():
    assert is_lie(W("01") - W("10"))
    assert not is_lie(W("01"))
    assert is_lie(ad_pow(x0(), 5, x1()))


def test_lie_elements_are_antiinvariant_under_star(rng):
    for wt in range(2, 8):
        p = random_lie(rng, wt)
        assert is_lie(p)
        assert (p + star(p)).is_zero()


def brute_force_dynkin(w):
    p = NCPoly.letter(GENUS0, int(w[0]))
    for ch in w[1:]:
        p = lie_bracket(p, NCPoly.letter(GENUS0, int(ch)))
    return p


def test_dynkin_matches_left_normed_brackets():
    for n in range(1, 7):
        for t in itertools.product("01", repeat=n):
            w = "".join(t)
            assert dynkin(W(w)) == brute_force_dynkin(w)


def test_derivation_leibniz():
    w = ad_pow(x0(), 2, x1())
    d = Derivation(GENUS0, w, None, KILLS_SECOND)
    assert apply_derivation(d, x1()).is_zero()
    assert apply_derivation(d, W("01")) == concat(w, x1())


def test_derivation_commutator_of_itself_vanishes():
    d = Derivation(GENUS0, W("0110"), W("01"))
    assert derivation_bracket(d, d).is_zero()


def test_derivation_bracket_matches_ihara_bracket():
    def delta(w):
        return Derivation(GENUS0, lie_bracket(x0(), w), None, KILLS_SECOND)

    rng = random.Random(5)
    for _ in range(4):
        v = random_lie(rng, 3)
        w = random_lie(rng, 4)
        lhs = derivation_bracket(delta(v), delta(w)).image_first
        assert lhs == delta(bracket_words(v, w)).image_first


def test_commutator_check_rejects_bad_derivations():
    a = NCPoly.letter(GENUS1, 0)
    with pytest.raises(ValueError):
        Derivation(GENUS1, a, a, KILLS_COMMUTATOR)


def test_json_round_trip():
    p = W("0110").scale(Q(-7, 3)) + W("1")
    assert NCPoly.from_json(p.to_json()) == p
