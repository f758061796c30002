"""Local Euler-factor polynomials for GSp4 and GSp4 x GL2.

The degree-four spin bracket (in X = ell^-s) is

    1 - l^(-3/2) lam X + (l^(-2) mu + (1 + l^(-2)) om) X^2
      - l^(-3/2) om lam X^3 + om^2 X^4

where lam, mu, om are the spherical eigenvalues of the three standard
GSp4 operators.  The degree-eight factor for GSp4 x GL2 is the product
of two such brackets with X scaled by the two GL2 Satake values, and for
principal series it factors as a product of two Rankin-Selberg degree
four factors through the theta lift; `verify_nov_factorization` checks
that identity with eigenvalues obtained from honest coset enumeration.
"""

from fractions import Fraction

from .cosets import hecke_R4, hecke_S4, hecke_T4
from .laurent import Laurent, PolyX
from .satake import UnramPS, ps_eigenvalue
from .sqrtext import SqrtExt


class LFactorPoly:
    """Polynomial in X with constant term 1 and a provenance tag."""

    __slots__ = ("poly", "tag")

    def __init__(self, poly, tag):
        assert poly[0] == 1 or poly[0] == Laurent.const(Fraction(1))
        self.poly = poly
        self.tag = tag

    def degree(self):
        return self.poly.degree()

    def __getitem__(self, i):
        return self.poly[i]

    def __eq__(self, other):
        p = other.poly if isinstance(other, LFactorPoly) else other
        return self.poly == p


def _one_like(x):
    if isinstance(x, Laurent):
        return Laurent.const(Fraction(1))
    return Fraction(1)


def p_spin_poly(lam, mu, om, ell):
    """The spin bracket; coefficients follow the displayed normalisation."""
    one = _one_like(lam)
    lh32 = SqrtExt.half_power(ell, -3)
    l2 = Fraction(1, ell ** 2)
    c1 = lam * lh32 * (-1)
    c2 = mu * l2 + om * (1 + l2)
    c3 = om * lam * lh32 * (-1)
    c4 = om * om
    return LFactorPoly(PolyX([one, c1, c2, c3, c4]), "spin")


def p_nov_poly(lam, mu, om, ell, ynu=None, ymu=None):
    """Degree-eight factor: product of spin brackets at X*ynu and X*ymu."""
    if ynu is None:
        ynu = Laurent.var("ynu")
    if ymu is None:
        ymu = Laurent.var("ymu")
    spin = p_spin_poly(lam, mu, om, ell).poly
    prod = spin.scale_x(ynu) * spin.scale_x(ymu)
    return LFactorPoly(prod, "nov")


def rankin_selberg(alphas, betas):
    """prod (1 - a b X) over the given Satake parameters."""
    one = _one_like(alphas[0])
    poly = PolyX([one])
    for a in alphas:
        for b in betas:
            poly = poly * PolyX([one, a * b * (-1)])
    return LFactorPoly(poly, "rankin-selberg")


def enumerated_eigenvalues(ell):
    """(lam, mu, om) of the three standard operators by coset enumeration."""
    ps = UnramPS("gsp4", ell)
    lam = ps_eigenvalue(hecke_T4(ell), ps)
    mu = ps_eigenvalue(hecke_R4(ell), ps)
    om = ps_eigenvalue(hecke_S4(ell), ps)
    return lam, mu, om


def spin_parameters():
    """Unnormalised spin Satake parameters of I(chi1, chi2; chi)."""
    x0, x1, x2 = Laurent.var("x0"), Laurent.var("x1"), Laurent.var("x2")
    return [x0, x0 * x1, x0 * x2, x0 * x1 * x2]


def theta_lift_parameters():
    """Satake pairs of the two GL2 factors I(chi1 chi2 chi, chi), I(chi1 chi, chi2 chi)."""
    x0, x1, x2 = Laurent.var("x0"), Laurent.var("x1"), Laurent.var("x2")
    return ([x1 * x2 * x0, x0], [x1 * x0, x2 * x0])


def verify_spin_factorization(ell):
    """The bracket with enumerated eigenvalues equals prod(1 - alpha X)."""
    lam, mu, om = enumerated_eigenvalues(ell)
    bracket = p_spin_poly(lam, mu, om, ell).poly
    one = Laurent.const(Fraction(1))
    target = PolyX([one])
    for a in spin_parameters():
        target = target * PolyX([one, a * (-1)])
    return bracket == target, bracket - target


def verify_nov_factorization(ell, corrupt=False):
    """Check the degree-eight factor against the two Rankin-Selberg factors.

    Returns a report dict with 'pass' and the residual polynomial's
    nonzero coefficient count on failure.
    """
    lam, mu, om = enumerated_eigenvalues(ell)
    if corrupt:
        lam = lam + Laurent.const(Fraction(1))
    nov = p_nov_poly(lam, mu, om, ell).poly
    pair1, pair2 = theta_lift_parameters()
    betas = [Laurent.var("ynu"), Laurent.var("ymu")]
    rs = rankin_selberg(pair1, betas).poly * rankin_selberg(pair2, betas).poly
    residual = nov - rs
    ok = residual.is_zero()
    return {
        "ell": ell,
        "pass": ok,
        "degree": nov.degree(),
        "residual_terms": 0 if ok else sum(
            1 for c in residual.coeffs if not (c == 0 or (isinstance(c, Laurent) and c.is_zero()))),
    }


# ---------------------------------------------------------------------------
# multiplier grading (the -i = sum of multiplier valuations claim)

GSP4_SYMBOLS = ("opT", "opR", "opS")
MULT_VALUATION = {"opT": 1, "opR": 2, "opS": 2}


def nov_poly_operator_form(ell):
    """The degree-eight polynomial with GSp4 coefficients kept as symbols.

    The spin bracket coefficients are rewritten with opT, opR, opS in
    place of the three eigenvalues; GL2 data stays as ynu, ymu.
    """
    lam = Laurent.var("opT")
    mu = Laurent.var("opR")
    om = Laurent.var("opS")
    return p_nov_poly(lam, mu, om, ell)


def multiplier_grading_check(ell):
    """Verify every X^i coefficient is homogeneous of multiplier degree i.

    For the primed polynomial the valuations negate, giving the stated
    -i grading; the X^5 coefficient's GSp4 part must be exactly
    {S T R, S^2 T}.
    """
    op_poly = nov_poly_operator_form(ell)
    per_coeff = []
    all_ok = True
    x5_monomials = set()
    for i in range(op_poly.degree() + 1):
        coeff = op_poly[i]
        if not isinstance(coeff, Laurent):
            coeff = Laurent.const(coeff)
        gradings = set()
        for key in coeff.terms:
            d = dict(key)
            grade = sum(MULT_VALUATION[s] * d.get(s, 0) for s in GSP4_SYMBOLS)
            gradings.add(grade)
            if i == 5:
                x5_monomials.add(tuple(sorted((s, d[s]) for s in GSP4_SYMBOLS if d.get(s))))
        ok = gradings <= {i}
        all_ok = all_ok and ok
        per_coeff.append({"i": i, "gradings": sorted(gradings), "ok": ok})
    expected_x5 = {
        tuple(sorted((("opS", 1), ("opT", 1), ("opR", 1)))),
        tuple(sorted((("opS", 2), ("opT", 1)))),
    }
    x5_ok = x5_monomials == expected_x5
    return {
        "ell": ell,
        "pass": all_ok and x5_ok,
        "per_coefficient": per_coeff,
        "x5_gsp4_part": sorted(x5_monomials),
        "x5_expected": sorted(expected_x5),
        "primed_grading": "negating the multiplier valuations gives -i per X^i",
    }
