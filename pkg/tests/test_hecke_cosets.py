import itertools
import random
from fractions import Fraction

import pytest

from gsp4euler.cosets import (
    CosetList, EnumerationBoundExceeded, HeckeOp, convolve,
    decompose_by_residues, decompose_double_coset, hecke_R4, hecke_S,
    hecke_S4, hecke_T, hecke_T4,
)
from gsp4euler.matq import Tag, cartan_label, coset_equal, mat, mat_mul
from gsp4euler.laurent import Laurent
from gsp4euler.satake import (
    UnramPS, is_symmetric_gl2, is_weyl_invariant_gsp4, ps_eigenvalue,
)
from gsp4euler.sqrtext import SqrtExt

rng = random.Random(31415)


# ------------------------------------------------------------ decomposition

def test_gl2_T_decomposition_count_and_oracle():
    for ell in (2, 3):
        dec = decompose_double_coset("gl2", ell, (1, 0))
        assert len(dec) == ell + 1
        oracle = decompose_by_residues("gl2", ell, (1, 0), radius=1)
        assert len(oracle) == ell + 1
        # each BFS rep matches exactly one oracle rep
        for r in dec.reps:
            assert sum(coset_equal(r, o, Tag("K"), ell) for o in oracle) == 1


def test_gl2_oracle_radius_stability():
    ell = 3
    assert len(decompose_by_residues("gl2", ell, (1, 0), radius=1)) == \
        len(decompose_by_residues("gl2", ell, (1, 0), radius=2))


def test_gsp4_central_single_coset():
    dec = decompose_double_coset("gsp4", 2, (1, 1, 2))
    assert len(dec) == 1


def test_gsp4_T_count():
    for ell in (2, 3):
        dec = decompose_double_coset("gsp4", ell, (1, 1, 1))
        assert len(dec) == ell ** 3 + ell ** 2 + ell + 1


def test_gsp4_T_oracle_at_2():
    ell = 2
    dec = decompose_double_coset("gsp4", ell, (1, 1, 1))
    oracle = decompose_by_residues("gsp4", ell, (1, 1, 1), radius=1)
    assert len(oracle) == len(dec) == 15
    for r in dec.reps:
        assert sum(coset_equal(r, o, Tag("K"), ell) for o in oracle) == 1


def test_reps_pairwise_inequivalent_and_labelled():
    ell = 2
    dec = decompose_double_coset("gsp4", ell, (2, 1, 2))
    for r in dec.reps:
        assert cartan_label(r, ell) == (2, 1, 2)
    for i, j in itertools.combinations(range(len(dec.reps)), 2):
        assert not coset_equal(dec.reps[i], dec.reps[j], Tag("K"), ell)


# -------------------------------------------------------------- convolution

def test_convolve_identity():
    ell = 3
    one = HeckeOp.char_identity("gsp4", ell)
    t = hecke_T4(ell)
    assert convolve(t, one) == t
    assert convolve(one, t) == t


def test_convolve_central_shift():
    ell = 2
    st = convolve(hecke_S4(ell), hecke_T4(ell))
    assert st.terms == {(2, 2, 3): Fraction(1)}


def test_gl2_T_squared():
    # classical: T_l * T_l = T_(l^2) + (l+1) * (central l) shape
    ell = 3
    t2 = convolve(hecke_T(ell), hecke_T(ell))
    assert t2.terms == {(2, 0): Fraction(1), (1, 1): Fraction(ell + 1)}


def test_convolution_commutes():
    ell = 2
    a, b = hecke_T4(ell), hecke_R4(ell)
    assert convolve(a, b) == convolve(b, a)


# ----------------------------------------------------------- ps eigenvalues

def test_eigenvalue_identity_op():
    ell = 3
    assert ps_eigenvalue(HeckeOp.char_identity("gsp4", ell), UnramPS("gsp4", ell)) == \
        Laurent.const(Fraction(1))


def test_eigenvalue_central_is_forced():
    for ell in (2, 3):
        val = ps_eigenvalue(hecke_S4(ell), UnramPS("gsp4", ell))
        expected = Laurent({(("x0", 2), ("x1", 1), ("x2", 1)): Fraction(1)})
        assert val == expected


def test_eigenvalue_gl2_T():
    for ell in (2, 3):
        val = ps_eigenvalue(hecke_T(ell), UnramPS("gl2", ell))
        half = SqrtExt.half_power(ell, 1)
        expected = (Laurent.var("ynu") + Laurent.var("ymu")) * half
        assert val == expected
        assert is_symmetric_gl2(val)


def test_eigenvalue_gsp4_T_spin_sum():
    # lambda = l^(3/2) * x0 (1 + x1)(1 + x2)
    ell = 2
    val = ps_eigenvalue(hecke_T4(ell), UnramPS("gsp4", ell))
    half = SqrtExt.half_power(ell, 3)
    x0, x1, x2 = Laurent.var("x0"), Laurent.var("x1"), Laurent.var("x2")
    one = Laurent.const(Fraction(1))
    expected = x0 * (one + x1) * (one + x2) * half
    assert val == expected


def test_eigenvalues_weyl_invariant():
    ell = 2
    for op in (hecke_T4(ell), hecke_R4(ell), hecke_S4(ell)):
        assert is_weyl_invariant_gsp4(ps_eigenvalue(op, UnramPS("gsp4", ell)))


def test_satake_homomorphism_small():
    ell = 2
    ps = UnramPS("gsp4", ell)
    t, s = hecke_T4(ell), hecke_S4(ell)
    assert ps_eigenvalue(convolve(t, s), ps) == \
        ps_eigenvalue(t, ps) * ps_eigenvalue(s, ps)


def test_eigenvalue_representative_independence():
    # translating each representative inside its coset must not change the sum
    ell = 2
    ps = UnramPS("gsp4", ell)
    base = ps_eigenvalue(hecke_T4(ell), ps)
    dec = decompose_double_coset("gsp4", ell, (1, 1, 1))
    from gsp4euler.cosets import k_generators
    from gsp4euler.satake import _gsp4_term
    from gsp4euler.matq import iwasawa_borel
    gens = k_generators("gsp4", ell)
    total = Laurent()
    for r in dec.reps:
        k = gens[rng.randrange(len(gens))]
        shifted = mat_mul(r, k)  # right multiplication stays in the coset
        exps, _, _ = iwasawa_borel(shifted, ell)
        total = total + _gsp4_term(tuple(exps), ell)
    assert total == base
