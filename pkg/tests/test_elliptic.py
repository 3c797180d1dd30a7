import random

import pytest

from canonzeta.canonical import xi
from canonzeta.commrep import ell_prime, unreduce
from canonzeta.elliptic import (a, b, b_degree_predicates, chi_equations_check, chi_residuals,
                                epsilon, epsilon_heretical, hain_phi, lift_theorem_check,
                                phi_apply, phi_zero, phi_zero_check, pollack_check, z3_derivation)
from canonzeta.exactnum import Q
from canonzeta.ihara import bracket
from canonzeta.canonical import xpow, z3
from canonzeta.ncwords import (GENUS1, NCPoly, ad_pow, apply_derivation, derivation_bracket,
                               lie_bracket, x0, x1)
from canonzeta.polys import MPoly, RatFn

from test_ncwords import random_lie


def test_epsilon_zero():
    e = epsilon(-1)
    assert e.image_first == b()
    assert e.image_second.is_zero()


@pytest.mark.parametrize("n", range(0, 6))
def test_epsilon_invariants(n):
    e = epsilon(n)
    assert e.image_first == ad_pow(a(), 2 * n + 2, b())
    assert e.image_second.coeff("a") == 0
    assert apply_derivation(e, lie_bracket(a(), b())).is_zero()


def test_epsilon_b_image_by_division():
    """rho([a, X]) = (y0 - y2) rho(X) gives an independent route to the image of b."""
    from canonzeta.commrep import rho
    for n in range(1, 4):
        e = epsilon(n)
        target = -lie_bracket(e.image_first, b())
        f = rho(target, 2)
        q = f.divide_linear([1, 0, -1])
        assert q is not None
        assert rho(e.image_second, 2) == q


def test_epsilon_two_is_central():
    for n in range(1, 5):
        assert derivation_bracket(epsilon(0), epsilon(n)).is_zero()


def test_epsilon_brackets_kill_commutator():
    theta = lie_bracket(a(), b())
    d = derivation_bracket(epsilon(1), derivation_bracket(epsilon(2), epsilon(-1)))
    assert apply_derivation(d, theta).is_zero()


def test_pollack_relation():
    assert pollack_check()
    bad = derivation_bracket(epsilon(1), epsilon(4)) - derivation_bracket(epsilon(2), epsilon(3))
    assert not bad.is_zero()


def test_ell_prime_is_a_lie_morphism():
    lhs = ell_prime(derivation_bracket(epsilon(1), epsilon(2)))[2]
    assert lhs == bracket(xpow(2), xpow(4))


def test_phi_first_terms():
    p = hain_phi(4)
    ba = lie_bracket(b(), a())
    bba = lie_bracket(b(), ba)
    assert p.truncate(max_count=2) == a() - ba.scale(Q(1, 2)) + bba.scale(Q(1, 12))
    b4a = ad_pow(b(), 4, a())
    w = "b" * 4 + "a"
    assert p.coeff(w) == Q(-1, 720) * b4a.coeff(w)
    assert phi_apply(x1(), 3) == lie_bracket(a(), b())


def test_phi_zero_examples():
    assert phi_zero(x1()) == lie_bracket(a(), b())
    assert phi_zero_check(x1())
    assert phi_zero_check(ad_pow(x0(), 2, x1()))


def test_phi_zero_random_lie():
    rng = random.Random(11)
    for wt in range(2, 9):
        p = random_lie(rng, wt)
        for r in p.counting_degrees():
            if r:
                assert phi_zero_check(p.counting_part(r))


def test_phi_maps_depth_to_b_degree():
    rng = random.Random(3)
    for wt in range(2, 7):
        p = random_lie(rng, wt)
        for r in p.counting_degrees():
            img = phi_apply(p.counting_part(r), r + 2)
            assert all(w.count("b") >= r for w in img.terms)


def test_b_degree_predicates():
    for n in range(1, 4):
        agree, ok = b_degree_predicates(epsilon(n), 1)
        assert agree and ok
    agree, ok = b_degree_predicates(epsilon(-1), 0)
    assert agree and ok
    # epsilon_0 sends a to b, so all three criteria place it in B^1 but not B^2
    agree, ok = b_degree_predicates(epsilon(-1), 1)
    assert agree and ok
    agree, ok = b_degree_predicates(epsilon(-1), 2)
    assert agree and not ok
    eh = epsilon_heretical
    d = derivation_bracket(eh(1), derivation_bracket(eh(2), eh(-1)))
    agree, ok = b_degree_predicates(d, 2)
    assert agree and ok


@pytest.mark.parametrize("n", range(2, 7))
def test_chi_equations(n):
    assert chi_equations_check(n)


def test_chi_detects_perturbation():
    n = 3
    x = xi(n, 3)
    chi = {r: unreduce(x[r]) for r in (1, 2, 3)}
    bump = RatFn(MPoly(3, {(2, 2, 2 * n - 6): Q(1)}))
    chi[3] = chi[3] + unreduce(bump)
    assert not chi_equations_check(n, chi)
    assert not chi_residuals(n, chi)[2].is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_lift_theorem(n):
    assert lift_theorem_check(n)


@pytest.mark.parametrize("n", [2, 3])
def test_lift_needs_correction(n):
    assert not lift_theorem_check(n, with_correction=False)


def test_z3_derivation():
    d = z3_derivation(1)
    assert ell_prime(d)[3] == z3()
    assert apply_derivation(d, lie_bracket(a(), b())).is_zero()
