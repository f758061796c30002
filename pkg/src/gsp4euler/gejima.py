"""The Cartan-type decomposition of GSp4(Q_ell) under H(Z_ell) x GSp4(Z_ell).

Representatives are g(mu', mu) = t(mu') B t(mu) with

    t(nu) = diag(ell^nu1, ell^nu2, ell^(nu3-nu2), ell^(nu3-nu1)) in H,
    B     = [[1,1,1,0],[0,1,0,1],[0,0,1,-1],[0,0,0,1]],

mu' in the half-dominant cone (mu'1 >= 0, 2 mu'2 >= mu'3) and mu
dominant (mu1 >= mu2, 2 mu2 >= mu3).

Membership of g in the double coset of g0 = g(mu', mu) asks for
h in H(Z_ell) with g0^-1 h^-1 g in GSp4(Z_ell).  The condition only
depends on the coset (H cap g0 K g0^-1) h, and those cosets biject with
the right cosets K * (g0^-1 h^-1 g0), which carry a canonical lattice
key.  So instead of sweeping all of H(Z/ell^N) we run a breadth-first
search over the coset orbit with H(Z_ell)-generators, storing h^-1 at
working precision; its size is the number of left H-cosets in the
double coset, which is what makes bound-1 verification tractable.
Integer matrices mod ell^N feed the compiled kernel in the hot loop.
"""

import random
from fractions import Fraction
from math import inf

from .cosets import unit_gens
from .kernels import lattice_key_mod, mat4_mul_mod
from .matq import (
    Tag, denom_exponent, det, embed_iota, identity, mat, mat_inv, mat_mul,
    multiplier, smith_invariants, val,
)


class ConeViolation(Exception):
    pass


class PrecisionOverflow(Exception):
    pass


class NotFoundWithinBound(Exception):
    pass


MAX_PRECISION = 64
MAX_ORBIT = 2_000_000

B_MATRIX = mat([[1, 1, 1, 0],
                [0, 1, 0, 1],
                [0, 0, 1, -1],
                [0, 0, 0, 1]])


class CocharPair:
    __slots__ = ("mu_prime", "mu")

    def __init__(self, mu_prime, mu):
        a, b, c = mu_prime
        if not (a >= 0 and 2 * b >= c):
            raise ConeViolation(f"mu' = {mu_prime} outside the half-dominant cone")
        a, b, c = mu
        if not (a >= b and 2 * b >= c):
            raise ConeViolation(f"mu = {mu} outside the dominant cone")
        self.mu_prime = tuple(mu_prime)
        self.mu = tuple(mu)

    def as_tuple(self):
        return (self.mu_prime, self.mu)

    def __eq__(self, other):
        return isinstance(other, CocharPair) and self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return f"CocharPair({self.mu_prime}, {self.mu})"


def t_h(nu, ell):
    """The H-torus element diag(l^nu1, l^nu2, l^(nu3-nu2), l^(nu3-nu1))."""
    n1, n2, n3 = nu
    q = Fraction(ell)
    return mat([[q ** n1, 0, 0, 0],
                [0, q ** n2, 0, 0],
                [0, 0, q ** (n3 - n2), 0],
                [0, 0, 0, q ** (n3 - n1)]])


def rep_matrix(pair, ell):
    g = mat_mul(mat_mul(t_h(pair.mu_prime, ell), B_MATRIX), t_h(pair.mu, ell))
    mu = multiplier(g)
    assert val(mu, ell) == pair.mu_prime[2] + pair.mu[2]
    return g


def h_generators():
    """Integer generators of a dense subgroup of H(Z_ell), iota-embedded.

    Inverses are omitted: each generator permutes the finite coset space
    being swept, so the monoid closure already covers the group orbit.
    """
    e12 = mat([[1, 1], [0, 1]])
    e21 = mat([[1, 0], [1, 1]])
    i2 = identity(2)
    return [
        embed_iota(e12, i2), embed_iota(e21, i2),
        embed_iota(i2, e12), embed_iota(i2, e21),
    ]


def h_unit_generators(ell):
    out = []
    for u in unit_gens(ell):
        d = mat([[u, 0], [0, 1]])
        out.append(embed_iota(d, d))
    return out


def _flat_int(m, scale, mod):
    out = []
    for row in m:
        for x in row:
            y = Fraction(x) * scale
            assert y.denominator == 1, "scaling did not clear denominators"
            out.append(int(y) % mod)
    return tuple(out)


_TRANSPOSE = tuple(4 * (i % 4) + i // 4 for i in range(16))


def _row_lattice_key(flat, ell, kprime):
    """Key of the ROW lattice: invariant of the left coset K * y."""
    return lattice_key_mod(tuple(flat[t] for t in _TRANSPOSE), ell, kprime)


class PairOrbit:
    """The BFS-enumerated coset orbit attached to one candidate pair."""

    __slots__ = ("pair", "ell", "e0", "eg0", "precision", "states", "g0", "g0_inv",
                 "mu_val", "smith")

    def __init__(self, pair, ell, max_ew):
        self.pair = pair
        self.ell = ell
        g0 = rep_matrix(pair, ell)
        g0_inv = mat_inv(g0)
        self.g0 = g0
        self.g0_inv = g0_inv
        self.e0 = denom_exponent(g0_inv, ell)
        self.eg0 = denom_exponent(g0, ell)
        self.mu_val = int(val(multiplier(g0), ell))
        self.smith = smith_invariants(g0, ell)
        kprime = 4 * (self.e0 + self.eg0) + 1
        n = max(kprime, self.e0 + max_ew + 1)
        if n > MAX_PRECISION:
            raise PrecisionOverflow(f"needed ell^{n}")
        self.precision = n
        mod = ell ** n
        a_flat = _flat_int(g0_inv, Fraction(ell) ** self.e0, mod)
        g0_flat = _flat_int(g0, Fraction(ell) ** self.eg0, mod)
        gens = [_flat_int(g, 1, mod) for g in h_generators() + h_unit_generators(ell)]

        # states are A*u for u in H(Z_ell); the coset (H cap g0 K g0^-1) u is
        # keyed by the row lattice of A*u*G0, and right multiplication by
        # generators descends to that coset space
        start_key = _row_lattice_key(mat4_mul_mod(a_flat, g0_flat, mod), ell, kprime)
        states = {start_key: a_flat}
        frontier = [a_flat]
        while frontier:
            nxt = []
            for ah in frontier:
                for g in gens:
                    ah2 = mat4_mul_mod(ah, g, mod)
                    key = _row_lattice_key(mat4_mul_mod(ah2, g0_flat, mod), ell, kprime)
                    if key not in states:
                        if len(states) >= MAX_ORBIT:
                            raise PrecisionOverflow("orbit bound exceeded")
                        states[key] = ah2
                        nxt.append(ah2)
            frontier = nxt
        self.states = list(states.values())

    def contains(self, g):
        """Is g in H(Z_ell) g0 GSp4(Z_ell)?  Assumes invariant prefilters hold."""
        ell = self.ell
        eg = denom_exponent(g, ell)
        if self.e0 + eg + 1 > self.precision:
            raise PrecisionOverflow("element needs more precision than the orbit")
        mod_test = ell ** (self.e0 + eg)
        mod = ell ** self.precision
        x_flat = _flat_int(g, Fraction(ell) ** eg, mod)
        for ah in self.states:
            z = mat4_mul_mod(ah, x_flat, mod)
            if all(v % mod_test == 0 for v in z):
                return True
        return False


_ORBIT_CACHE = {}
_INVARIANT_CACHE = {}


def _orbit(pair, ell, max_ew=6):
    key = (pair.as_tuple(), ell)
    orb = _ORBIT_CACHE.get(key)
    if orb is None or orb.precision < orb.e0 + max_ew + 1:
        orb = PairOrbit(pair, ell, max_ew)
        _ORBIT_CACHE[key] = orb
    return orb


def pair_invariants(pair, ell):
    """(multiplier valuation, Smith invariants) of the representative.

    Both are constant on H(Z_ell) g K, so they prefilter membership
    without building the coset orbit.
    """
    key = (pair.as_tuple(), ell)
    inv = _INVARIANT_CACHE.get(key)
    if inv is None:
        g0 = rep_matrix(pair, ell)
        inv = (int(val(multiplier(g0), ell)), smith_invariants(g0, ell))
        _INVARIANT_CACHE[key] = inv
    return inv


def double_coset_member(g, pair, ell):
    """Exact membership of g in the double coset labelled by pair."""
    mu_val, smith = pair_invariants(pair, ell)
    if int(val(multiplier(g), ell)) != mu_val:
        return False
    if smith_invariants(g, ell) != smith:
        return False
    orb = _orbit(pair, ell, max_ew=max(6, denom_exponent(g, ell) + 1))
    return orb.contains(g)


def cone_pairs(bound):
    """All literal cone pairs with coordinates in [-bound, bound].

    This parametrisation is redundant: t(mu' - (k,k,2k)) B t(mu + (k,k,2k))
    is the identical matrix (central shift), and explicit H(Z_ell)
    witnesses identify further pairs whose mu'-part fails dominance in
    the first GL2 factor.  Use `canonical_pairs` for a duplicate-free
    candidate family.
    """
    out = []
    for a1 in range(0, bound + 1):
        for b1 in range(-bound, bound + 1):
            for c1 in range(-bound, bound + 1):
                if 2 * b1 < c1:
                    continue
                for a2 in range(-bound, bound + 1):
                    for b2 in range(-bound, a2 + 1):
                        for c2 in range(-bound, bound + 1):
                            if 2 * b2 < c2:
                                continue
                            out.append(CocharPair((a1, b1, c1), (a2, b2, c2)))
    return out


def canonical_pairs(bound):
    """Duplicate-free candidate family within a coordinate window.

    mu' = (0, b, c) with c <= 0 <= 2b - c: the central shift is pinned
    by mu'_1 = 0 and both GL2 components of t(mu') are dominant (the
    empirically verified fundamental domain: pairwise disjoint and
    exhaustive under random sampling); mu runs over the dominant cone.
    """
    out = []
    for b in range(-bound, bound + 1):
        for c in range(-bound, 1):
            if 2 * b < c:
                continue
            for m1 in range(-bound, bound + 1):
                for m2 in range(-bound, m1 + 1):
                    for m3 in range(-bound, bound + 1):
                        if 2 * m2 >= m3:
                            out.append(CocharPair((0, b, c), (m1, m2, m3)))
    return out


def central_normalize(pair):
    """Shift (mu', mu) -> (mu' - (k,k,2k), mu + (k,k,2k)) to mu'_1 = 0.

    The representative matrix is literally unchanged; the image is the
    canonical parameter of the class when mu' was dominant in both
    GL2 components.
    """
    k = pair.mu_prime[0]
    mp = (0, pair.mu_prime[1] - k, pair.mu_prime[2] - 2 * k)
    mu = (pair.mu[0] + k, pair.mu[1] + k, pair.mu[2] + 2 * k)
    return CocharPair(mp, mu)


def gejima_reduce(g, ell, exponent_bound):
    """The unique candidate pair whose double coset contains g.

    Candidates are pruned by multiplier valuation and Smith invariants
    before the orbit search runs.  NotFoundWithinBound signals that the
    window was too small, never a failure of the decomposition.
    """
    vmu = int(val(multiplier(g), ell))
    sm = smith_invariants(g, ell)
    for pair in canonical_pairs(exponent_bound):
        if pair.mu_prime[2] + pair.mu[2] != vmu:
            continue
        if pair_invariants(pair, ell)[1] != sm:
            continue
        orb = _orbit(pair, ell, max_ew=max(6, denom_exponent(g, ell) + 1))
        if orb.contains(g):
            return pair
    raise NotFoundWithinBound(f"no candidate within bound {exponent_bound}")


def random_h_integral(ell, rng, steps=6):
    """Random element of H(Z_ell) as an integer matrix."""
    gens = h_generators() + h_unit_generators(ell)
    g = identity(4)
    for _ in range(steps):
        g = mat_mul(g, gens[rng.randrange(len(gens))])
    return g


def random_k_integral(ell, rng, steps=8):
    from .cosets import k_generators
    gens = k_generators("gsp4", ell)
    g = identity(4)
    for _ in range(steps):
        g = mat_mul(g, gens[rng.randrange(len(gens))])
    return g


def random_bounded_element(ell, bound, rng):
    """Random g in GSp4(Q_ell) with entry valuations >= -bound."""
    while True:
        pairs = cone_pairs(bound)
        pair = pairs[rng.randrange(len(pairs))]
        g = mat_mul(mat_mul(random_h_integral(ell, rng), rep_matrix(pair, ell)),
                    random_k_integral(ell, rng))
        if denom_exponent(g, ell) <= bound:
            return g


def verify_partition(ell, bound, samples=200, seed=20240811, support_samples=10):
    """Disjointness and exhaustion evidence for the decomposition.

    (a) every canonical candidate representative lies in its own double
        coset and in no other candidate's (full matrix, prefiltered);
    (b) `samples` random bounded elements (built from the full redundant
        literal cone family, translated both-sidedly) all land in
        exactly one canonical class, scanned over the window 2*bound+1
        that the central normalisation can spill into;
    (c) sampled elements of H t(mu') K t(mu) K reduce successfully (the
        support-containment shadow of the partial-order lemma).
    A sample of orbits is also re-run at higher precision.
    """
    rng = random.Random(seed)
    pairs = canonical_pairs(bound)
    reps = {p: rep_matrix(p, ell) for p in pairs}

    diag_ok = offdiag_failures = 0
    for p in pairs:
        for q in pairs:
            member = double_coset_member(reps[p], q, ell)
            if p == q:
                diag_ok += member
            else:
                offdiag_failures += member
    disjoint = (diag_ok == len(pairs)) and offdiag_failures == 0

    scan = canonical_pairs(2 * bound + 1)
    reduced = 0
    multiples = 0
    for _ in range(samples):
        g = random_bounded_element(ell, bound, rng)
        hits = []
        vmu = int(val(multiplier(g), ell))
        sm = smith_invariants(g, ell)
        for pair in scan:
            if pair.mu_prime[2] + pair.mu[2] != vmu:
                continue
            if pair_invariants(pair, ell)[1] != sm:
                continue
            orb = _orbit(pair, ell, max_ew=max(6, denom_exponent(g, ell) + 1))
            if orb.contains(g):
                hits.append(pair)
        if len(hits) == 1:
            reduced += 1
        elif len(hits) > 1:
            multiples += 1

    support_ok = 0
    for _ in range(support_samples):
        p = pairs[rng.randrange(len(pairs))]
        g = mat_mul(mat_mul(random_h_integral(ell, rng), t_h(p.mu_prime, ell)),
                    mat_mul(random_k_integral(ell, rng),
                            mat_mul(t_h_dominant(p.mu, ell), random_k_integral(ell, rng))))
        try:
            gejima_reduce(g, ell, 2 * bound + 1)
            support_ok += 1
        except NotFoundWithinBound:
            pass

    probe_ok = _tightness_probe(ell, pairs[: min(3, len(pairs))], reps)

    return {
        "ell": ell,
        "bound": bound,
        "candidates": len(pairs),
        "disjoint": disjoint,
        "diagonal_hits": diag_ok,
        "offdiagonal_hits": offdiag_failures,
        "samples": samples,
        "reduction_rate": reduced / samples if samples else 1.0,
        "ambiguous": multiples,
        "support_samples": support_samples,
        "support_contained": support_ok,
        "tightness_probe": probe_ok,
        "pass": disjoint and (samples == 0 or reduced == samples)
                and support_ok == support_samples and probe_ok,
    }


def t_h_dominant(mu, ell):
    """t(mu) as a GSp4 torus element (same matrix as t_h)."""
    return t_h(mu, ell)


def _tightness_probe(ell, sample_pairs, reps):
    """Recompute a few memberships with one more unit of precision."""
    ok = True
    for p in sample_pairs:
        fresh = PairOrbit(p, ell, max_ew=8)
        base = _orbit(p, ell)
        ok = ok and len(fresh.states) == len(base.states)
        ok = ok and fresh.contains(reps[p])
    return ok
