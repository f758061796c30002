import random
from fractions import Fraction

import pytest

from gsp4euler.cyclotomic import CycNum, cyclotomic_poly, kronecker, euler_phi
from gsp4euler.sqrtext import SqrtExt
from gsp4euler.laurent import Laurent, PolyX, LaurentOverflowError, MissingAssignment
from gsp4euler.abgroup import FinAbGroup, smith_normal_form, abelian_structure
from gsp4euler.groupring import GroupRingElt

rng = random.Random(20240811)


def rand_frac():
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def rand_cyc(m):
    return CycNum(m, [rand_frac() for _ in range(euler_phi(m))])


def rand_sqrt(ell):
    return SqrtExt(ell, rand_frac(), rand_frac())


def rand_laurent(nvars=2):
    t = {}
    for _ in range(rng.randint(0, 4)):
        key = tuple((f"v{i}", rng.randint(-3, 3)) for i in range(nvars))
        t[key] = rand_frac()
    return Laurent(t)


# ---------------------------------------------------------------- cyclotomic

def test_cyclotomic_poly_basics():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert len(cyclotomic_poly(12)) == euler_phi(12) + 1


def test_zeta_orders():
    i = CycNum.zeta(4)
    assert i * i == -1
    z3 = CycNum.zeta(3)
    assert z3 ** 3 == 1 and z3 != 1
    z8 = CycNum.zeta(8)
    assert z8 ** 4 == -1


def test_cyc_inverse_and_division():
    for m in (4, 8, 12):
        for _ in range(10):
            x = rand_cyc(m)
            if x.is_zero():
                continue
            assert x * x.inv() == 1


def test_conjugation_is_involution_and_norm_positive():
    x = rand_cyc(8)
    assert x.conj().conj() == x
    n = x * x.conj()
    # the norm of a + bi type elements is rational for m = 4
    y = rand_cyc(4)
    assert (y * y.conj()).is_rational()


def test_promotion_compatibility():
    i = CycNum.zeta(4)
    i12 = i.promote(12)
    assert i12 * i12 == -1
    assert i12 == i  # mixed-modulus equality promotes to lcm


def test_gauss_sum_sqrt_disc():
    for disc in (-4, -3, -8, -7, -15):
        s = CycNum.sqrt_disc(disc)
        assert s * s == disc


def test_kronecker_values():
    assert kronecker(-4, 5) == 1      # 5 splits in Q(i)
    assert kronecker(-4, 3) == -1     # 3 inert
    assert kronecker(-4, 2) == 0      # 2 ramified
    assert kronecker(-3, 7) == 1


# ------------------------------------------------------------------ sqrtext

def test_sqrt_ext_norm_identity():
    for _ in range(25):
        ell = rng.choice([2, 3, 5])
        x = rand_sqrt(ell)
        prod = x * x.conj_sqrt()
        assert prod.b == 0
        assert prod.a == x.a * x.a - ell * x.b * x.b


def test_half_power():
    r = SqrtExt.half_power(2, 3)      # 2^(3/2) = 2*sqrt(2)
    assert r.a == 0 and r.b == 2
    assert r * r == 8
    assert SqrtExt.half_power(3, -2) == Fraction(1, 3)


def test_sqrt_ext_ring_axioms():
    for _ in range(20):
        a, b, c = (rand_sqrt(3) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_sqrt_ext_inverse():
    x = SqrtExt(2, Fraction(3), Fraction(1))
    assert x * x.inv() == 1


def test_sqrt_ext_over_cyclotomic():
    i = CycNum.zeta(4)
    x = SqrtExt(5, i, i + 1)
    y = x * x.conj_sqrt()
    assert y.b == 0 or y.b.is_zero()


# ------------------------------------------------------------------- laurent

def test_laurent_ring_axioms():
    for _ in range(15):
        a, b, c = rand_laurent(), rand_laurent(), rand_laurent()
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_laurent_eval_identity_case():
    p = Laurent.var("x1") * Laurent.var("x2") * Laurent.var("x0", 2)
    assert p.evaluate({"x0": Fraction(1), "x1": Fraction(1), "x2": Fraction(1)}) == 1


def test_laurent_eval_zero_case():
    ell = 3
    coeff = SqrtExt.half_power(ell, -3)
    p = Laurent.const(Fraction(1)) - Laurent.var("lam") * Laurent.var("X") * coeff
    v = p.substitute({"lam": Fraction(0)})
    assert v == Laurent.const(Fraction(1))


def test_laurent_negative_exponents():
    p = Laurent.var("x", -2)
    assert p.evaluate({"x": Fraction(2)}) == Fraction(1, 4)
    z = CycNum.zeta(4)
    q = Laurent.var("x", -1)
    assert q.evaluate({"x": z}) == z.inv()


def test_laurent_missing_assignment():
    p = Laurent.var("x") + Laurent.var("y")
    with pytest.raises(MissingAssignment):
        p.evaluate({"x": Fraction(1)})


def test_laurent_exponent_bound():
    with pytest.raises(LaurentOverflowError):
        Laurent.var("x", 100)


def test_polyx_scale_and_eq():
    p = PolyX([Fraction(1), Fraction(2), Fraction(1)])
    q = p.scale_x(Fraction(3))
    assert q[2] == 9 and q[1] == 6 and q[0] == 1
    assert p.eval_at(Fraction(1)) == 4


# ------------------------------------------------------------------- groups

def test_snf_diag():
    d, U, V = smith_normal_form([[2, 0], [0, 3]])
    assert sorted(abs(x) for x in d) == [1, 6] or sorted(abs(x) for x in d) == [2, 3]
    # divisibility chain
    assert d[0] != 0 and d[1] % d[0] == 0


def test_finab_quotient_p_examples():
    g = FinAbGroup([6])
    q, proj = g.p_quotient(3)
    assert q.orders == (3,)
    g2 = FinAbGroup([4, 2])
    q2, _ = g2.p_quotient(2)
    assert q2.orders == (4, 2)
    g3 = FinAbGroup([12, 10])
    q3, proj3 = g3.p_quotient(5)
    assert q3.orders == (5,)
    assert proj3((7, 7)) == (2,)


def test_finab_quotient_commutes_and_orders_multiply():
    g = FinAbGroup([12, 18])
    q2, p2 = g.p_quotient(2)
    q3, p3 = g.p_quotient(3)
    # |G| = 216 = 8 * 27: the p-quotients carry exactly the p-parts
    assert q2.order() == 8 and q3.order() == 27
    assert q2.order() * q3.order() == g.order()
    # the two projections commute: quotienting q2 by 3 and q3 by 2 are trivial
    assert q2.p_quotient(3)[0].order() == 1
    assert q3.p_quotient(2)[0].order() == 1
    # projections are homomorphisms
    for x, y in [((5, 7), (11, 13)), ((1, 0), (3, 4))]:
        assert p2(g.add(x, y)) == q2.add(p2(x), p2(y))
        assert p3(g.add(x, y)) == q3.add(p3(x), p3(y))


def test_finab_characters_and_element_order():
    g = FinAbGroup([4])
    chars = g.characters()
    assert len(chars) == 4
    val = g.char_value((1,), (1,))
    assert val == CycNum.zeta(4)
    assert g.element_order((2,)) == 2


def test_abelian_structure_of_units_mod_12():
    # (Z/12)^* = Z/2 x Z/2
    elems = [a for a in range(12) if a % 2 and a % 3]
    group, coords = abelian_structure(elems, lambda x, y: (x * y) % 12, 1)
    assert sorted(group.orders) == [2, 2]
    assert coords(1) == group.identity()


def test_abelian_structure_cyclic():
    elems = list(range(9))
    group, coords = abelian_structure(elems, lambda x, y: (x + y) % 9, 0)
    assert group.orders == (9,)


# ---------------------------------------------------------------- groupring

def trivial_group():
    return FinAbGroup([2], ["s"])


def test_groupring_identity_char():
    g = trivial_group()
    e = GroupRingElt.one(g)
    assert e.apply_char((0,)) == 1


def test_groupring_sign_char():
    g = trivial_group()
    e = GroupRingElt.basis(g, (1,))
    assert e.apply_char((1,)) == -1


def test_groupring_char_is_ring_hom():
    g = FinAbGroup([4, 2])
    m = 8
    for _ in range(10):
        e1 = GroupRingElt(g, {(rng.randrange(4), rng.randrange(2)): rand_cyc(8) for _ in range(3)})
        e2 = GroupRingElt(g, {(rng.randrange(4), rng.randrange(2)): rand_cyc(8) for _ in range(3)})
        for char in [(0, 0), (1, 0), (2, 1), (3, 1)]:
            lhs = (e1 * e2).apply_char(char, m)
            rhs = e1.apply_char(char, m) * e2.apply_char(char, m)
            assert lhs == rhs


def test_groupring_monomial_inverse():
    g = FinAbGroup([4])
    e = GroupRingElt.basis(g, (3,), CycNum.zeta(8))
    assert e * e.inv() == GroupRingElt.one(g)


def test_groupring_ring_axioms():
    g = FinAbGroup([3])
    for _ in range(10):
        es = [GroupRingElt(g, {(rng.randrange(3),): rand_cyc(4) for _ in range(2)}) for _ in range(3)]
        a, b, c = es
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
