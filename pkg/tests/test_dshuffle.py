import itertools

import pytest
import sympy

from canonzeta.canonical import s_elements, sigma_c, tau_data, xi, xpow, z3
from canonzeta.commrep import DepthTuple, ell_prime, rho_inv, unreduce
from canonzeta.dshuffle import (FULL_SHUFFLE, FULL_STUFFLE, at, full_ds_defect,
                                linear_stuffle_residuals_all, linearized_defects,
                                linearized_residual, ls_basis, ls_dimension, monomials,
                                pls_member, semi_homogeneous_residuals, shuffle_defect,
                                shuffle_residual, shuffle_residuals_all, stuffle_defect_mod_products,
                                stuffle_regularized)
from canonzeta.elliptic import epsilon, epsilon_heretical
from canonzeta.exactnum import Q
from canonzeta.ihara import bracket
from canonzeta.modforms import kernel_K, kernel_pairs
from canonzeta.ncwords import GENUS0, NCPoly, derivation_bracket, lie_bracket
from canonzeta.polys import MPoly, RatFn

from test_ncwords import brute_force_dynkin


def test_s_elements_shuffle():
    s = s_elements()
    t = DepthTuple({1: s[1], 2: s[2]})
    assert shuffle_defect(t, 2).satisfied


def test_s_elements_stuffle_keeps_product_term():
    # the depth-two stuffle for s closes once the product s1(x1) s1(x2) is kept
    s = s_elements()
    t = DepthTuple({1: s[1], 2: s[2]})
    res = stuffle_defect_mod_products(t, 2).residual
    assert res == -(at(s[1], 2, (1,)) * at(s[1], 2, (2,)))


@pytest.mark.parametrize("n", range(2, 7))
def test_xi_double_shuffle_mod_products(n):
    t = xi(n, 3)
    for d in (2, 3):
        assert shuffle_defect(t, d).satisfied
        assert stuffle_defect_mod_products(t, d).satisfied


@pytest.mark.parametrize("n", range(2, 7))
def test_sigma_double_shuffle_mod_products(n):
    t = sigma_c(n, 3)
    for d in (2, 3):
        assert shuffle_defect(t, d).satisfied
        assert stuffle_defect_mod_products(t, d).satisfied


def test_shuffle_residual_detects_nonsolution():
    f = RatFn(MPoly.var(2, 0) * MPoly.var(2, 1))
    x1, x2 = MPoly.var(2, 0), MPoly.var(2, 1)
    assert shuffle_residual(f, 2) == RatFn(x1 * x2 * 2 + x1 * x1 + x2 * x2)


def test_linearized_depth_one():
    assert linearized_residual(xpow(4), 1).is_zero()
    assert linearized_residual(xpow(3), 1) == xpow(3).scale(2)


def test_linearized_on_epsilon_bracket():
    d = derivation_bracket(epsilon_heretical(1), epsilon_heretical(2))
    t = ell_prime(d)
    assert linearized_defects(t, 2).satisfied
    assert pls_member(t)


def test_z3_linearized_stuffle_sum_is_four():
    assert linearized_residual(z3(), 3) == RatFn.const(3, 4)
    assert shuffle_residual(z3(), 3).is_zero()


def test_pls_membership_examples():
    for n in range(1, 6):
        assert pls_member(ell_prime(epsilon(n)))
    assert not pls_member(DepthTuple({3: z3()}))
    assert not pls_member(DepthTuple({1: xpow(3)}))


def test_full_double_shuffle_of_tau():
    data = tau_data(20)
    for d in (2, 3):
        for fl in (FULL_SHUFFLE, FULL_STUFFLE):
            assert full_ds_defect(data.tau, d, 20, fl).satisfied


def test_full_stuffle_residual_of_zero_series():
    # f = 0: f*2 = 1/48 and the symmetrization doubles it
    zero = DepthTuple({1: RatFn.const(1, 0), 2: RatFn.const(2, 0), 3: RatFn.const(3, 0)})
    rep = full_ds_defect(zero, 2, 10, FULL_STUFFLE)
    assert rep.residual == RatFn.const(2, Q(1, 24))


def test_regularization_shifts():
    t = tau_data(12).tau
    reg = stuffle_regularized(t, 12)
    assert reg[2] - t[2] == RatFn.const(2, Q(1, 48))


def test_semi_homogeneous_system_for_gamma():
    data = tau_data(16)
    res = semi_homogeneous_residuals(data.gamma, 16)
    assert all(r.is_zero() for r in res.values()), res


# ---------------------------------------------------------------------------
# dimensions


def test_depth_one_dimensions():
    for n in range(2, 20):
        assert ls_dimension(1, n) == (1 if n % 2 == 1 and n >= 3 else 0)


@pytest.mark.parametrize("n", range(6, 25, 2))
def test_depth_two_matches_bracket_image(n):
    assert ls_dimension(2, n) == len(kernel_pairs(n)) - len(kernel_K(n))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_depth_parity(d):
    for n in range(d, 25):
        if (n - d) % 2 == 1:
            assert ls_dimension(d, n) == 0, (d, n)


def _sympy_ls_dimension(d, n):
    """Independent rank computation: Lie test by left-normed brackets, stuffle by sympy."""
    xs = sympy.symbols("x1:%d" % (d + 1))
    mons = monomials(d, n - d)
    coeffs = sympy.symbols("c0:%d" % len(mons))
    f = sum(c * sympy.Mul(*[x ** k for x, k in zip(xs, m)]) for c, m in zip(coeffs, mons))
    eqs = []
    # linearized stuffle over all splittings: sum over stuffle-free shuffles of index blocks
    if d == 1:
        eqs.append(sympy.expand(f - f.subs(xs[0], -xs[0])))
    for k in range(1, d):
        u, v = list(range(k)), list(range(k, d))
        total = 0
        for pos in itertools.combinations(range(d), k):
            order, iu, iv = [], iter(u), iter(v)
            for p in range(d):
                order.append(next(iu) if p in pos else next(iv))
            # argument i receives x_{order[i]}
            total += f.subs({xs[i]: sympy.Symbol("t%d" % j) for i, j in enumerate(order)},
                            simultaneous=True)
        total = total.subs({sympy.Symbol("t%d" % i): xs[i] for i in range(d)}, simultaneous=True)
        eqs.append(sympy.expand(total))
    rows = []
    for e in eqs:
        poly = sympy.Poly(e, *xs)
        for c in poly.coeffs():
            rows.append([sympy.Poly(c, *coeffs).coeff_monomial(ci) for ci in coeffs])
    # Lie condition on rho^{-1} of the un-reduced function
    for_words = []
    for m in mons:
        g = unreduce(RatFn(MPoly(d, {m: Q(1)})))
        p = rho_inv(g.as_poly(), d)
        dyn = NCPoly.zero(GENUS0)
        for w, c in p.terms.items():
            dyn = dyn + brute_force_dynkin(w).scale(c)
        for_words.append(dyn - p.scale(n))
    words = sorted(set().union(*[q.terms for q in for_words]))
    for w in words:
        rows.append([sympy.Rational(str(q.coeff(w))) for q in for_words])
    rank = sympy.Matrix(rows).rank() if rows else 0
    return len(mons) - rank


@pytest.mark.parametrize("d,n", [(2, 8), (2, 10), (2, 12), (2, 13), (3, 9), (3, 11)])
def test_ls_dimension_against_independent_rank(d, n):
    assert ls_dimension(d, n) == _sympy_ls_dimension(d, n)


def test_ls_closed_under_bracket():
    for n1, n2 in [(3, 8), (5, 8), (3, 12), (5, 10)]:
        for f in ls_basis(1, n1):
            for g in ls_basis(2, n2):
                h = bracket(f, g)
                assert all(r.is_zero() for r in shuffle_residuals_all(h, 3))
                assert all(r.is_zero() for r in linear_stuffle_residuals_all(h, 3))
