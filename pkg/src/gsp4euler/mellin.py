"""Unramified Mellin evaluation of Siegel-section integrands.

Computes  I(k, s) = integral over Q_ell^x of phi((0, x) k) lam(x) |x|^(s + 1/2) dx
with vol(Z_ell^x) = 1, exactly, as a rational function in q = ell^(-s).
lam is an unramified character given by its value at ell (left symbolic
as the Laurent variable "lam" when no value is supplied).  Supported phi:

    "std"         ch(Z_ell^2)
    ("congr", t)  ch(ell^t Z_ell x (1 + ell^t Z_ell)),  t = 1, 2

The row (0, x) k is x times the bottom row of k, which is primitive for
k in GL2(Z_ell); so "std" gives the shell-by-shell geometric series
1 / (1 - lam(ell) ell^(-s-1/2)) and ("congr", t) is supported on a single
multiplicative coset of volume 1/(ell^(t-1) (ell-1)).
"""

from fractions import Fraction
from math import inf

from .laurent import Laurent, PolyX
from .matq import val
from .sqrtext import SqrtExt


class DivergentSeries(Exception):
    pass


class RationalFunctionQ:
    """num/den, both PolyX over Laurent coefficients, in q = ell^(-s)."""

    __slots__ = ("num", "den", "ell")

    def __init__(self, num, den, ell):
        self.num = num
        self.den = den
        self.ell = ell

    @staticmethod
    def zero(ell):
        return RationalFunctionQ(PolyX([Laurent()]), PolyX([Laurent.const(Fraction(1))]), ell)

    @staticmethod
    def constant(c, ell):
        return RationalFunctionQ(PolyX([c if isinstance(c, Laurent) else Laurent.const(c)]),
                                 PolyX([Laurent.const(Fraction(1))]), ell)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RationalFunctionQ):
            other = RationalFunctionQ.constant(other, self.ell)
        return (self.num * other.den) == (other.num * self.den)

    def evaluate(self, q_value, lam_value=None):
        """Numeric value at q = ell^(-s); raises DivergentSeries on a pole."""
        assign = {"lam": lam_value} if lam_value is not None else {}

        def ev(poly):
            acc = Fraction(0)
            qp = Fraction(1)
            for c in poly.coeffs:
                cc = c.substitute(assign) if isinstance(c, Laurent) else Laurent.const(c)
                if cc.variables():
                    raise DivergentSeries("unassigned symbolic character value")
                const = cc.constant_part()
                if isinstance(const, SqrtExt):
                    if const.b != 0:
                        raise DivergentSeries("sqrt(ell) has no numeric value here")
                    const = const.a
                acc += Fraction(const) * qp
                qp *= q_value
            return acc

        den = ev(self.den)
        if den == 0:
            raise DivergentSeries("evaluation at a pole")
        return ev(self.num) / den

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"


def mellin_siegel_eval(phi, k, ell, lam_value=None):
    """Exact Mellin transform; see module docstring.

    k must be an integral 2x2 matrix with unit determinant at ell.
    """
    d2 = k[0][0] * k[1][1] - k[0][1] * k[1][0]
    assert min(val(x, ell) for row in k for x in row) >= 0, "k must be integral"
    assert val(d2, ell) == 0, "k must have unit determinant"
    c, d = k[1]
    vc, vd = val(c, ell), val(d, ell)
    assert min(vc, vd) == 0  # bottom row of a unit-determinant matrix is primitive
    one = Laurent.const(Fraction(1))

    if phi == "std":
        # sum over v >= 0 of lam^v (q ell^(-1/2))^v
        lam = Laurent.var("lam") if lam_value is None else Laurent.const(lam_value)
        den = PolyX([one, lam * SqrtExt.half_power(ell, -1) * (-1)])
        return RationalFunctionQ(PolyX([one]), den, ell)

    kind, t = phi
    assert kind == "congr" and t >= 1
    # x d in 1 + ell^t Z_ell forces x to be the unit coset d^(-1)(1 + ell^t Z_ell),
    # possible only when v(d) = 0; then x c in ell^t Z_ell iff v(c) >= t.
    if vd != 0 or vc < t:
        return RationalFunctionQ.zero(ell)
    vol = Fraction(1, ell ** (t - 1) * (ell - 1))
    return RationalFunctionQ.constant(Laurent.const(vol), ell)


def in_u0(k, ell, t):
    """k in U0(ell^t): lower-left entry in ell^t Z_ell (k already unit-det)."""
    return val(k[1][0], ell) >= t


def siegel_support_value_check(ell):
    """Support and value of the phi_(l,2) Siegel section over K = GL2(Z_ell).

    The transform depends only on the bottom row mod ell^2; sweep all
    primitive bottom rows: it must vanish unless v(c) >= 2 and v(d) = 0
    (the U0(ell^2) rows) where it equals 1/(ell (ell - 1)).
    """
    q = ell ** 2
    target = Fraction(1, ell * (ell - 1))
    checked = on_support = 0
    ok = True
    for c in range(q):
        for d in range(q):
            if c % ell == 0 and d % ell == 0:
                continue  # not primitive: no unit-determinant completion
            # complete to a unit-determinant integral matrix
            if d % ell:
                a, b = 1, 0
            else:
                a, b = 0, -1
            k = ((Fraction(a), Fraction(b)), (Fraction(c), Fraction(d)))
            assert val(k[0][0] * k[1][1] - k[0][1] * k[1][0], ell) == 0
            r = mellin_siegel_eval(("congr", 2), k, ell, lam_value=Fraction(1))
            checked += 1
            if in_u0(k, ell, 2) and d % ell:
                on_support += 1
                ok = ok and (r == RationalFunctionQ.constant(target, ell))
            else:
                ok = ok and r.is_zero()
    return {"ell": ell, "pass": ok, "checked": checked,
            "support_rows": on_support, "value": f"1/{ell * (ell - 1)}"}
