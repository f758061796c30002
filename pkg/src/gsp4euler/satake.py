"""Symbolic spherical eigenvalues on unramified principal series.

For GSp4 the inducing character of diag(a, b, c/b, c/a) is
x1^v(a) x2^v(b) x0^v(c); for GL2 it is ynu^v(a) ymu^v(d).  The
eigenvalue of ch(KtK) on the spherical vector is the sum over left
cosets (in Borel form n*t') of delta_B^(1/2)(t') chi(t'), with the
modulus exponents derived from the positive-root pairings rather than
hard-coded.  Half powers of ell live in the formal sqrt(ell) extension.
"""

from fractions import Fraction

from .cosets import decompose_double_coset
from .laurent import Laurent
from .matq import delta_exponent_gsp4
from .sqrtext import SqrtExt

GSP4_VARS = ("x1", "x2", "x0")
GL2_VARS = ("ynu", "ymu")


class UnramPS:
    """Symbolic unramified principal series (the Satake variables)."""

    __slots__ = ("group", "ell")

    def __init__(self, group, ell):
        assert group in ("gl2", "gsp4")
        self.group = group
        self.ell = ell


def _gsp4_term(exps, ell):
    e1, e2, e3, e4 = exps
    c = e1 + e4
    assert e2 + e3 == c
    half = -delta_exponent_gsp4((e1, e2, c))
    coeff = SqrtExt.half_power(ell, half)
    mono = Laurent({(("x0", c), ("x1", e1), ("x2", e2)): Fraction(1)})
    return mono * coeff


def _gl2_term(exps, ell):
    e1, e2 = exps
    half = -(e1 - e2)
    coeff = SqrtExt.half_power(ell, half)
    mono = Laurent({(("ynu", e1), ("ymu", e2)): Fraction(1)})
    return mono * coeff


def ps_eigenvalue(op, ps):
    """Eigenvalue of a HeckeOp on the spherical vector, as a Laurent poly."""
    assert op.group == ps.group and op.ell == ps.ell
    total = Laurent()
    for label, coeff in op.terms.items():
        dec = decompose_double_coset(op.group, op.ell, label)
        part = Laurent()
        for exps in dec.exps:
            term = _gsp4_term(exps, op.ell) if op.group == "gsp4" else _gl2_term(exps, op.ell)
            part = part + term
        total = total + part * coeff
    return total


def weyl_orbit_gsp4(p):
    """Orbit of a Laurent polynomial in (x1, x2, x0) under the Weyl action.

    Generated by x1 <-> x2 and (x1 -> 1/x1, x0 -> x0*x1); spherical
    eigenvalues must be fixed points.
    """
    def s1(q):
        return q.rename({"x1": "x2", "x2": "x1"})

    def s2(q):
        return q.substitute({"x1": Laurent.var("x1", -1),
                             "x0": Laurent.var("x0") * Laurent.var("x1")})

    orbit = {p}
    frontier = [p]
    while frontier:
        nxt = []
        for q in frontier:
            for f in (s1, s2):
                r = f(q)
                if r not in orbit:
                    orbit.add(r)
                    nxt.append(r)
        frontier = nxt
    return orbit


def is_weyl_invariant_gsp4(p):
    return len(weyl_orbit_gsp4(p)) == 1


def is_symmetric_gl2(p):
    return p == p.rename({"ynu": "ymu", "ymu": "ynu"})
