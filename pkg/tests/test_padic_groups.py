import random
from fractions import Fraction

import pytest

from gsp4euler import matq
from gsp4euler.matq import (
    Tag, J4, cartan_label, coset_equal, denom_exponent, det, embed_iota,
    identity, is_gsp4, iwasawa_borel, mat, mat_inv, mat_mul, multiplier,
    multiplier_and_membership, smith_invariants, torus_gsp4, val,
    NotSymplectic, DeterminantMismatch, root_unipotent, WEYL,
    delta_exponent_gsp4,
)

rng = random.Random(987654)


def rand_k_gl2(ell, depth=2):
    """Random element of GL2(Z_ell): unit determinant by construction."""
    while True:
        m = mat([[rng.randint(-8, 8) for _ in range(2)] for _ in range(2)])
        d = det(m)
        if d != 0 and val(d, ell) == 0:
            return m


def rand_k_gsp4(ell, steps=8):
    """Random element of GSp4(Z_ell) as a word in roots, Weyl and units."""
    g = identity(4)
    units = [1, -1, ell + 1, 2 * ell + 1, ell - 1 if ell > 2 else 3]
    for _ in range(steps):
        kind = rng.randrange(3)
        if kind == 0:
            g = mat_mul(g, root_unipotent(rng.randrange(4), rng.randint(-3, 3),
                                          rng.choice("+-")))
        elif kind == 1:
            g = mat_mul(g, WEYL[rng.randrange(len(WEYL))])
        else:
            u = rng.choice([x for x in units if x % ell != 0])
            v = rng.choice([x for x in units if x % ell != 0])
            # diag(u, v, u, v) has similitude uv, a unit
            g = mat_mul(g, mat([[u, 0, 0, 0], [0, v, 0, 0],
                                [0, 0, u, 0], [0, 0, 0, v]]))
    return g


def rand_gsp4(ell):
    """Random element of GSp4(Q_ell): k * torus * k'."""
    a = rng.randint(-2, 3)
    b = rng.randint(-2, a)
    c = rng.randint(2 * b - 2, 2 * b)
    t = torus_gsp4((a, b, c), ell)
    return mat_mul(mat_mul(rand_k_gsp4(ell), t), rand_k_gsp4(ell))


def test_multiplier_identity_and_center():
    assert multiplier(identity(4)) == 1
    g = mat([[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    mu, member = multiplier_and_membership(g, Tag("K"), 2)
    assert mu == 2 and member is False


def test_eta_matrix_has_multiplier_one_not_integral():
    ell = 3
    eta = mat([[1, 0, Fraction(1, ell), 0],
               [0, 1, 0, Fraction(1, ell)],
               [0, 0, 1, 0],
               [0, 0, 0, 1]])
    mu, member = multiplier_and_membership(eta, Tag("K"), ell)
    assert mu == 1
    assert member is False


def test_not_symplectic_raises():
    g = mat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(NotSymplectic):
        multiplier(g)


def test_iota_basics():
    assert embed_iota(identity(2), identity(2)) == identity(4)
    h1 = mat([[3, 0], [0, 1]])
    h2 = mat([[1, 0], [0, 3]])
    g = embed_iota(h1, h2)
    assert multiplier(g) == 3
    assert g[0][0] == 3 and g[1][1] == 1 and g[2][2] == 3 and g[3][3] == 1


def test_iota_determinant_mismatch():
    with pytest.raises(DeterminantMismatch):
        embed_iota(mat([[2, 0], [0, 1]]), identity(2))


def test_iota_multiplier_random():
    ell = 5
    for _ in range(100):
        h1 = mat([[rng.randint(-9, 9) for _ in range(2)] for _ in range(2)])
        d1 = det(h1)
        if d1 == 0:
            continue
        # build h2 with the same determinant
        x = rng.randint(-9, 9)
        h2 = mat([[1, x], [0, d1]]) if rng.random() < 0.5 else mat([[d1, x], [0, 1]])
        g = embed_iota(h1, h2)
        assert multiplier(g) == d1


def test_smith_invariants_examples():
    ell = 5
    assert smith_invariants(mat([[ell, 0], [0, 1]]), ell) == (0, 1)
    d = mat([[ell ** 2, 0, 0, 0], [0, ell, 0, 0], [0, 0, ell, 0], [0, 0, 0, 1]])
    assert smith_invariants(d, ell) == (0, 1, 1, 2)


def test_smith_invariants_bi_invariance():
    ell = 2
    d = mat([[ell ** 2, 0, 0, 0], [0, ell, 0, 0], [0, 0, ell, 0], [0, 0, 0, 1]])
    for _ in range(20):
        k1, k2 = rand_k_gsp4(ell), rand_k_gsp4(ell)
        assert smith_invariants(mat_mul(mat_mul(k1, d), k2), ell) == (0, 1, 1, 2)


def test_cartan_label_examples():
    ell = 3
    g = torus_gsp4((1, 1, 1), ell)  # diag(l, l, 1, 1)
    assert g == mat([[3, 0, 0, 0], [0, 3, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert cartan_label(g, ell) == (1, 1, 1)
    t = torus_gsp4((2, 1, 2), ell)  # the paper's t(nu) for nu = (2,1,2)
    assert cartan_label(t, ell) == (2, 1, 2)


def test_cartan_label_random_conjugates():
    ell = 2
    t = mat([[ell ** 3, 0, 0, 0], [0, ell ** 2, 0, 0], [0, 0, ell, 0], [0, 0, 0, 1]])
    assert cartan_label(t, ell) == (3, 2, 3)
    for _ in range(15):
        k1, k2 = rand_k_gsp4(ell), rand_k_gsp4(ell)
        assert cartan_label(mat_mul(mat_mul(k1, t), k2), ell) == (3, 2, 3)


def test_iwasawa_gl2_examples():
    ell = 3
    exps, n, k = iwasawa_borel(mat([[ell, 0], [0, 1]]), ell)
    assert exps == (1, 0) and n == identity(2) and k == identity(2)


def test_iwasawa_borel_form_input():
    ell = 3
    g = mat_mul(mat([[1, Fraction(1, ell)], [0, 1]]), mat([[ell, 0], [0, 1]]))
    exps, n, k = iwasawa_borel(g, ell)
    assert exps == (1, 0)
    assert n == mat([[1, Fraction(1, ell)], [0, 1]])
    assert k == identity(2)


def test_iwasawa_gl2_random_reassembly():
    ell = 2
    for _ in range(200):
        g = mat([[Fraction(rng.randint(-20, 20), ell ** rng.randint(0, 2)) for _ in range(2)]
                 for _ in range(2)])
        if det(g) == 0:
            continue
        exps, n, k = iwasawa_borel(g, ell)
        t = mat([[Fraction(ell) ** exps[0], 0], [0, Fraction(ell) ** exps[1]]])
        assert mat_mul(mat_mul(n, t), k) == g
        assert Tag("K").contains(k, ell)
        assert n[1][0] == 0 and n[0][0] == 1 and n[1][1] == 1


def test_iwasawa_gsp4_random_reassembly():
    for ell in (2, 3):
        for _ in range(60):
            g = rand_gsp4(ell)
            exps, n, k = iwasawa_borel(g, ell)
            t = mat([[Fraction(ell) ** exps[i] if i == j else 0 for j in range(4)] for i in range(4)])
            assert mat_mul(mat_mul(n, t), k) == g
            assert Tag("K").contains(k, ell)
            assert is_gsp4(n)
            # torus condition
            assert exps[0] + exps[3] == exps[1] + exps[2]


def test_iwasawa_gsp4_exponents_stable_under_right_k():
    ell = 2
    for _ in range(25):
        g = rand_gsp4(ell)
        exps, _, _ = iwasawa_borel(g, ell)
        k = rand_k_gsp4(ell)
        exps2, _, _ = iwasawa_borel(mat_mul(g, k), ell)
        assert exps == exps2


def test_coset_equal():
    ell = 3
    g = mat([[ell, 0], [0, 1]])
    assert coset_equal(g, g, Tag("K"), ell)
    h = mat([[1, 0], [0, ell]])
    assert not coset_equal(g, h, Tag("K"), ell)


def test_standard_tl_representatives_pairwise_inequivalent():
    # left-coset system for K diag(l,1) K: ell upper cosets plus one lower
    ell = 3
    reps = [mat([[ell, j], [0, 1]]) for j in range(ell)] + [mat([[1, 0], [0, ell]])]
    for i in range(len(reps)):
        for j in range(len(reps)):
            assert coset_equal(reps[i], reps[j], Tag("K"), ell) == (i == j)


def test_subgroup_tags():
    ell = 2
    k1 = Tag("K1", 2)
    assert k1.contains(mat([[1, 5], [4, 5]]), ell)
    assert not k1.contains(mat([[1, 5], [2, 5]]), ell)
    k_up = Tag("K^1", 2)
    assert k_up.contains(mat([[5, 7], [4, 3]]), ell)
    assert not k_up.contains(mat([[3, 7], [4, 3]]), ell)
    h = Tag("H")
    assert h.contains(embed_iota(mat([[2, 1], [1, 1]]), mat([[1, 1], [1, 2]])), ell)
    assert not h.contains(torus_gsp4((1, 1, 1), ell), ell)  # determinant not a unit
    assert not h.contains(mat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]), ell)


def test_delta_exponent():
    # delta(diag(l,l,1,1)): exponents (1,1,1) -> 4+2-3 = 3
    assert delta_exponent_gsp4((1, 1, 1)) == 3
    # central element: delta trivial
    assert delta_exponent_gsp4((1, 1, 2)) == 0


def test_denominator_exponent():
    ell = 2
    g = mat([[1, Fraction(1, 4)], [0, 1]])
    assert denom_exponent(g, ell) == 2
    assert denom_exponent(identity(2), ell) == 0
