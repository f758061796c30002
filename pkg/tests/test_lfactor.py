from fractions import Fraction

from gsp4euler.laurent import Laurent, PolyX
from gsp4euler.lfactor import (
    LFactorPoly, enumerated_eigenvalues, multiplier_grading_check,
    nov_poly_operator_form, p_nov_poly, p_spin_poly, rankin_selberg,
    spin_parameters, theta_lift_parameters, verify_nov_factorization,
    verify_spin_factorization,
)
from gsp4euler.sqrtext import SqrtExt


def sym(name):
    return Laurent.var(name)


def test_spin_poly_displayed_coefficients():
    # the five coefficients, verbatim, with symbolic lam, mu, om
    ell = 5
    lam, mu, om = sym("lam"), sym("mu"), sym("om")
    p = p_spin_poly(lam, mu, om, ell)
    one = Laurent.const(Fraction(1))
    lh32 = SqrtExt.half_power(ell, -3)
    l2 = Fraction(1, ell * ell)
    assert p[0] == one
    assert p[1] == lam * lh32 * (-1)
    assert p[2] == mu * l2 + om * (1 + l2)
    assert p[3] == om * lam * lh32 * (-1)
    assert p[4] == om * om
    assert p.degree() == 4


def test_spin_poly_zero_lambda_mu():
    # lam = mu = 0, om = 1: 1 + (1 + l^-2) X^2 + X^4
    ell = 3
    p = p_spin_poly(Laurent.const(Fraction(0)), Laurent.const(Fraction(0)),
                    Laurent.const(Fraction(1)), ell)
    assert p[1] == Laurent() and p[3] == Laurent()
    assert p[2] == Laurent.const(Fraction(1) + Fraction(1, 9))
    assert p[4] == Laurent.const(Fraction(1))


def test_spin_factorization_from_enumeration():
    for ell in (2, 3):
        ok, residual = verify_spin_factorization(ell)
        assert ok, f"spin bracket fails to factor at ell={ell}"


def test_nov_poly_degree_and_specialisation():
    ell = 2
    lam, mu, om = sym("lam"), sym("mu"), sym("om")
    nov = p_nov_poly(lam, mu, om, ell)
    assert nov.degree() == 8
    # ynu = ymu = 1 collapses to the square of the spin bracket
    spin = p_spin_poly(lam, mu, om, ell).poly
    sq = spin * spin
    one = Laurent.const(Fraction(1))
    collapsed = PolyX([c.substitute({"ynu": one, "ymu": one}) if isinstance(c, Laurent) else c
                       for c in nov.poly.coeffs])
    assert collapsed == sq


def test_rankin_selberg_constant_term():
    rs = rankin_selberg([sym("a1"), sym("a2")], [sym("b1"), sym("b2")])
    assert rs.degree() == 4
    assert rs[0] == Laurent.const(Fraction(1))


def test_theta_lift_parameters_match_spin_set():
    pair1, pair2 = theta_lift_parameters()
    combined = {repr(p) for p in pair1 + pair2}
    spins = {repr(p) for p in spin_parameters()}
    assert combined == spins


def test_nov_factorization_passes():
    for ell in (2, 3):
        rep = verify_nov_factorization(ell)
        assert rep["pass"], rep
        assert rep["degree"] == 8


def test_nov_factorization_negative_control():
    rep = verify_nov_factorization(2, corrupt=True)
    assert not rep["pass"]
    assert rep["residual_terms"] > 0


def test_multiplier_grading():
    rep = multiplier_grading_check(2)
    assert rep["pass"], rep
    for entry in rep["per_coefficient"]:
        assert entry["gradings"] in ([], [entry["i"]])
    # X^5 coefficient: S T R + S^2 T exactly
    assert rep["x5_gsp4_part"] == rep["x5_expected"]


def test_grading_constant_term():
    rep = multiplier_grading_check(3)
    assert rep["per_coefficient"][0]["gradings"] == [0]
    assert rep["pass"]
