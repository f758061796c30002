"""Degeneracy-map identities between levels K and K1(ell) in GL2(Q_ell).

Operators from level-K1(ell) objects to level-K objects are finite
formal sums of left cosets g K1(ell), acting by left translation.  In
this bimodule

    pr1 = sum over K/K1(ell) of [k]
    pr2 = sum over K/(K cap t^-1 K1(ell) t) of [k * tau],  tau = diag(ell, 1)
    T'_level = sum over K1(ell) diag(1/ell, 1) K1(ell) / K1(ell)
    T'_sph, S' = spherical operators composed after pr1/pr2

and the two identities verified as exact multiset equalities are

    pr1 . T'_level = T'_sph . pr1 - S' . pr2
    pr2 . T'_level = ell * pr1

together with the index [K1(l) : K1(l) cap t^-1 K1(l) t] = ell.
All enumeration here is by residues with pairwise exact dedup; the
sizes involved are tiny.
"""

from fractions import Fraction

from .matq import Tag, coset_equal, identity, mat, mat_inv, mat_mul

K1 = Tag("K1", 1)


class CosetSum:
    """Integer combination of left cosets g K1(ell), with exact dedup."""

    def __init__(self, ell, items=None):
        self.ell = ell
        self.items = []  # [matrix, coeff] pairs, pairwise coset-inequivalent
        if items:
            for g, c in items:
                self.add(g, c)

    def add(self, g, c):
        for entry in self.items:
            if coset_equal(entry[0], g, K1, self.ell):
                entry[1] += c
                if entry[1] == 0:
                    self.items.remove(entry)
                return
        if c != 0:
            self.items.append([g, c])

    def __add__(self, other):
        out = CosetSum(self.ell)
        for g, c in self.items:
            out.add(g, c)
        for g, c in other.items:
            out.add(g, c)
        return out

    def scale(self, c):
        out = CosetSum(self.ell)
        for g, x in self.items:
            out.add(g, x * c)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def left_mul(self, m):
        out = CosetSum(self.ell)
        for g, c in self.items:
            out.add(mat_mul(m, g), c)
        return out

    def compose(self, other):
        """Multiset product: (sum a_i [g_i]) o (sum b_j [h_j]) = sum a_i b_j [g_i h_j]."""
        out = CosetSum(self.ell)
        for g, a in self.items:
            for h, b in other.items:
                out.add(mat_mul(g, h), a * b)
        return out

    def is_zero(self):
        return not self.items

    def __eq__(self, other):
        return (self - other).is_zero()

    def __len__(self):
        return len(self.items)


def gl2_residues(ell, depth):
    """All of GL2(Z/ell^depth), lifted to integer matrices."""
    q = ell ** depth
    out = []
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    if (a * d - b * c) % ell:
                        out.append(mat([[a, b], [c, d]]))
    return out


def coset_space(ell, predicate, depth=1):
    """Representatives of K / U for U given by a residue predicate mod ell^depth."""
    reps = []
    for g in gl2_residues(ell, depth):
        if not any(predicate(mat_mul(mat_inv(r), g)) for r in reps):
            reps.append(g)
    return reps


def pr1_star(ell):
    """Trace from level K1(ell) to level K: sum over K/K1(ell)."""
    reps = coset_space(ell, lambda m: K1.contains(m, ell))
    out = CosetSum(ell)
    for r in reps:
        out.add(r, 1)
    return out


def pr2_star(ell):
    """Second degeneracy map: twist by tau = diag(ell, 1) then trace.

    The implicit subgroup is J = K cap t^-1 K1(ell) t = {b = 0, d = 1
    mod ell} with t = diag(1, ell); each term is k * tau and the sum is
    representative-independent because tau^-1 J tau lies in K1(ell).
    """
    tau = mat([[ell, 0], [0, 1]])

    def in_J(m):
        return (Tag("K").contains(m, ell)
                and m[0][1] % ell == 0 and (m[1][1] - 1) % ell == 0)

    reps = coset_space(ell, in_J)
    out = CosetSum(ell)
    for r in reps:
        out.add(mat_mul(r, tau), 1)
    return out


def t_level_op(ell):
    """T' at level ell: left cosets of K1(l) diag(1/l, 1) K1(l).

    Enumerated from K1(ell) residues mod ell^2 (conjugation by the
    antidominant element moves congruences by at most one power, so
    depth two is exhaustive); certified against the index formula.
    """
    gamma = mat([[Fraction(1, ell), 0], [0, 1]])
    out = CosetSum(ell)
    q = ell ** 2
    for a in range(q):
        if a % ell == 0:
            continue
        for b in range(q):
            for c in range(0, q, ell):
                for d in range(1, q, ell):
                    if (a * d - b * c) % ell == 0:
                        continue
                    u = mat([[a, b], [c, d]])
                    out.add(mat_mul(u, gamma), 1)
    expected = index_k1_conjugate(ell)
    assert len(out) == expected, (len(out), expected)
    return CosetSum(ell, [(g, 1) for g, _ in out.items])


def index_k1_conjugate(ell):
    """[K1(l) : K1(l) cap t^-1 K1(l) t] with t = diag(1, l), counted mod l^2."""
    t = mat([[1, 0], [0, ell]])
    ti = mat_inv(t)
    q = ell ** 2
    total = 0
    inside = 0
    for a in range(q):
        if a % ell == 0:
            continue
        for b in range(q):
            for c in range(0, q, ell):
                for d in range(1, q, ell):
                    if (a * d - b * c) % ell == 0:
                        continue
                    total += 1
                    u = mat([[a, b], [c, d]])
                    if K1.contains(mat_mul(mat_mul(ti, u), t), ell):
                        inside += 1
    assert total % inside == 0
    return total // inside


def t_spherical_op(ell):
    """Spherical T' = ch(K diag(1/l, 1) K) as a sum of cosets g K (level K).

    Composition against level-K1 sums is by multiset product; the left
    cosets of the spherical operator are the ell + 1 standard ones
    scaled by the central 1/ell.
    """
    from .cosets import decompose_double_coset
    dec = decompose_double_coset("gl2", ell, (1, 0))
    zinv = mat([[Fraction(1, ell), 0], [0, Fraction(1, ell)]])
    out = CosetSum(ell)
    for r in dec.reps:
        out.add(mat_mul(zinv, r), 1)
    return out


def s_spherical_op(ell):
    return CosetSum(ell, [(mat([[Fraction(1, ell), 0], [0, Fraction(1, ell)]]), 1)])


def k_mod_k0_system(ell):
    """The displayed system K/K0(l): lower unipotents and the antidiagonal."""
    reps = [mat([[1, 0], [v, 1]]) for v in range(ell)]
    reps.append(mat([[0, 1], [1, 0]]))
    return reps


def gl2_degeneracy_identities(ell):
    """Verify the two pushforward identities and the index, exactly."""
    pr1 = pr1_star(ell)
    pr2 = pr2_star(ell)
    t_lvl = t_level_op(ell)
    t_sph = t_spherical_op(ell)
    s_sph = s_spherical_op(ell)

    lhs13 = pr1.compose(t_lvl)
    rhs13 = t_sph.compose(pr1) - s_sph.compose(pr2)
    eq13 = lhs13 == rhs13

    lhs14 = pr2.compose(t_lvl)
    rhs14 = pr1.scale(ell)
    eq14 = lhs14 == rhs14

    idx = index_k1_conjugate(ell)

    k0 = k_mod_k0_system(ell)
    k0_ok = all(
        coset_equal(k0[i], k0[j], Tag("K0", 1), ell) == (i == j)
        for i in range(len(k0)) for j in range(len(k0)))

    return {
        "ell": ell,
        "eq13": eq13,
        "eq14": eq14,
        "index": idx,
        "index_ok": idx == ell,
        "k_mod_k0_count": len(k0),
        "k_mod_k0_ok": k0_ok and len(k0) == ell + 1,
        "pass": eq13 and eq14 and idx == ell and k0_ok,
    }
