import random
from fractions import Fraction

import pytest

from gsp4euler.gejima import (
    B_MATRIX, CocharPair, ConeViolation, NotFoundWithinBound, PairOrbit,
    canonical_pairs, central_normalize, cone_pairs, double_coset_member,
    gejima_reduce, random_h_integral, random_k_integral,
    rep_matrix, t_h, verify_partition,
)
from gsp4euler.matq import (
    Tag, is_gsp4, mat, mat_mul, multiplier, smith_invariants, val,
)

rng = random.Random(424242)


def test_cone_validation():
    CocharPair((0, 0, 0), (0, 0, 0))
    CocharPair((2, 1, 1), (3, 1, 0))
    with pytest.raises(ConeViolation):
        CocharPair((-1, 0, 0), (0, 0, 0))
    with pytest.raises(ConeViolation):
        CocharPair((0, 0, 1), (0, 0, 0))     # 2*0 < 1
    with pytest.raises(ConeViolation):
        CocharPair((0, 0, 0), (0, 1, 0))     # mu1 < mu2


def test_b_matrix_is_symplectic_rep():
    assert is_gsp4(B_MATRIX)
    assert multiplier(B_MATRIX) == 1
    p0 = CocharPair((0, 0, 0), (0, 0, 0))
    assert rep_matrix(p0, 3) == B_MATRIX


def test_rep_matrix_multiplier():
    ell = 3
    p = CocharPair((0, 0, 0), (1, 1, 1))
    g = rep_matrix(p, ell)
    assert g == mat_mul(B_MATRIX, mat([[ell, 0, 0, 0], [0, ell, 0, 0],
                                       [0, 0, 1, 0], [0, 0, 0, 1]]))
    assert multiplier(g) == ell


def test_rep_matrix_multiplier_random_cone_points():
    ell = 2
    pts = canonical_pairs(2)
    for _ in range(50):
        p = pts[rng.randrange(len(pts))]
        g = rep_matrix(p, ell)
        assert val(multiplier(g), ell) == p.mu_prime[2] + p.mu[2]


def test_central_shift_is_matrix_identity():
    ell = 2
    p = CocharPair((1, 1, 1), (0, 0, -1))
    q = central_normalize(p)
    assert q.mu_prime[0] == 0
    assert rep_matrix(p, ell) == rep_matrix(q, ell)


def test_membership_trivial_and_translated():
    ell = 2
    p = CocharPair((0, 1, 0), (1, 0, 0))
    g0 = rep_matrix(p, ell)
    assert double_coset_member(g0, p, ell)
    for _ in range(10):
        g = mat_mul(mat_mul(random_h_integral(ell, rng), g0),
                    random_k_integral(ell, rng))
        assert double_coset_member(g, p, ell)


def test_membership_rejects_other_candidates():
    ell = 2
    ps = canonical_pairs(1)
    p = ps[3]
    g0 = rep_matrix(p, ell)
    for q in ps[:10]:
        assert double_coset_member(g0, q, ell) == (p == q)


def test_literal_cone_family_is_redundant():
    # two distinct literal cone points proved equivalent by explicit witness
    ell = 2
    p = CocharPair((0, 1, 0), (1, 1, 1))
    q = CocharPair((0, 1, 1), (1, 0, 0))
    assert double_coset_member(rep_matrix(p, ell), q, ell)
    assert double_coset_member(rep_matrix(q, ell), p, ell)


def test_gejima_reduce_roundtrip():
    ell = 2
    for p in canonical_pairs(1)[::5]:
        assert gejima_reduce(rep_matrix(p, ell), ell, 1) == p


def test_gejima_reduce_translated_witness():
    ell = 2
    p = CocharPair((0, 1, 0), (2, 1, 1))
    g = mat_mul(mat_mul(random_h_integral(ell, rng), rep_matrix(p, ell)),
                random_k_integral(ell, rng))
    assert gejima_reduce(g, ell, 2) == p


def test_gejima_reduce_not_found():
    ell = 2
    p = CocharPair((0, 1, 0), (2, 2, 1))
    with pytest.raises(NotFoundWithinBound):
        gejima_reduce(rep_matrix(p, ell), ell, 0)


def test_verify_partition_small():
    rep = verify_partition(2, 1, samples=25, support_samples=4)
    assert rep["pass"], rep
    assert rep["disjoint"] and rep["reduction_rate"] == 1.0


def test_verify_partition_ell3():
    rep = verify_partition(3, 1, samples=10, support_samples=2)
    assert rep["pass"], rep


def test_duplicated_candidate_flagged():
    # negative control: a duplicated candidate breaks pairwise disjointness
    ell = 2
    pairs = canonical_pairs(1)[:6]
    dup = CocharPair((pairs[0].mu_prime[0] + 1,) + pairs[0].mu_prime[1:],
                     pairs[0].mu)
    # dup is the central shift of pairs[0]: same class, different parameter
    dup = CocharPair((1, pairs[0].mu_prime[1] + 1, pairs[0].mu_prime[2] + 2),
                     (pairs[0].mu[0] - 1, pairs[0].mu[1] - 1, pairs[0].mu[2] - 2))
    assert central_normalize(dup) == pairs[0]
    hits = sum(double_coset_member(rep_matrix(dup, ell), q, ell) for q in pairs)
    assert hits == 1  # collides with pairs[0]: injecting it breaks disjointness


def test_orbit_precision_probe():
    ell = 2
    p = CocharPair((0, 1, 0), (1, 0, 0))
    a = PairOrbit(p, ell, 6)
    b = PairOrbit(p, ell, 10)
    assert len(a.states) == len(b.states)
