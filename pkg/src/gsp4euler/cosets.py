"""Left-coset enumeration and convolution for spherical Hecke operators.

A double coset K t K is expanded into left cosets gamma K by a breadth
first search: starting from t, multiply on the left by a dense set of
generators of K and deduplicate via the column-lattice invariant
gamma K  <->  gamma Z_ell^n, encoded as an integer Hermite normal form.
The BFS needs no radius heuristics and is exhaustive because the coset
space is finite and discrete while the generators are dense in K.

A slower independent oracle (`decompose_by_residues`) enumerates Borel
form candidates n*t over residue windows and keeps one representative
per coset; tests compare the two routes.
"""

from fractions import Fraction
from math import inf

from .matq import (
    Tag, cartan_label, coset_equal, denom_exponent, det, identity,
    is_integral, iwasawa_borel, mat, mat_mul, mat_scal, multiplier,
    root_unipotent, torus_gl2, torus_gsp4, val, WEYL,
)


class EnumerationBoundExceeded(Exception):
    pass


MAX_COSETS = 500_000


def unit_gens(ell):
    if ell == 2:
        return [-1, 3]
    # a generator of (Z/ell^k)^x for all k: any primitive root mod ell^2
    for g in range(2, ell * ell):
        if g % ell == 0:
            continue
        seen, x = set(), 1
        for _ in range(ell * (ell - 1)):
            x = x * g % (ell * ell)
            seen.add(x)
        if len(seen) == ell * (ell - 1):
            return [g]
    raise AssertionError("no primitive root found")


def k_generators(group, ell):
    if group == "gl2":
        gens = [mat([[1, 1], [0, 1]]), mat([[1, 0], [1, 1]])]
        for u in unit_gens(ell):
            gens.append(mat([[u, 0], [0, 1]]))
        return gens
    gens = []
    for i in range(4):
        gens.append(root_unipotent(i, 1))
        gens.append(root_unipotent(i, 1, "-"))
    for u in unit_gens(ell):
        gens.append(mat([[u, 0, 0, 0], [0, 1, 0, 0], [0, 0, u, 0], [0, 0, 0, 1]]))
        gens.append(mat([[u, 0, 0, 0], [0, u, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))
    gens.extend(WEYL[:4])
    return gens


# ---------------------------------------------------------------------------
# canonical key of a left coset gamma K: the column lattice gamma Z_ell^n

def hnf_rows(rows):
    """Canonical Hermite normal form of the row lattice (integers)."""
    h = [list(r) for r in rows]
    n = len(h[0])
    r = 0
    for c in range(n):
        while True:
            live = [i for i in range(r, len(h)) if h[i][c] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda i: abs(h[i][c]))
            i0 = live[0]
            for i in live[1:]:
                q = h[i][c] // h[i0][c]
                h[i] = [x - q * y for x, y in zip(h[i], h[i0])]
        live = [i for i in range(r, len(h)) if h[i][c] != 0]
        if not live:
            continue
        i0 = live[0]
        h[r], h[i0] = h[i0], h[r]
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
        r += 1
    return tuple(tuple(row) for row in h[:r])


def coset_key(g, ell):
    """Canonical key of the left coset g K, K = GL_n(Z_ell) cap group.

    Entries must lie in Z[1/ell].  The key is the HNF basis of the
    Z-lattice generated by the columns of ell^e g together with
    ell^(e + vdet) Z^n, which pins down exactly the Z_ell-column-lattice.
    """
    n = len(g)
    e = denom_exponent(g, ell)
    scaled = [[x * ell ** e for x in row] for row in g]
    cols = [[int(scaled[i][j]) if Fraction(scaled[i][j]).denominator == 1 else None
             for i in range(n)] for j in range(n)]
    for col in cols:
        assert all(x is not None for x in col), "coset keys need Z[1/ell] entries"
    vdet = val(det(g), ell)
    assert vdet is not inf
    big = ell ** (e + int(vdet) + n * e + 1)
    rows = cols + [[big if i == j else 0 for i in range(n)] for j in range(n)]
    return e, hnf_rows(rows)


# ---------------------------------------------------------------------------
# double-coset decomposition

_DECOMP_CACHE = {}


def torus_rep(group, label, ell):
    return torus_gl2(label, ell) if group == "gl2" else torus_gsp4(label, ell)


class CosetList:
    """Left-coset representatives of one double coset, in Borel form n*t."""

    __slots__ = ("group", "ell", "label", "reps", "exps")

    def __init__(self, group, ell, label, reps, exps):
        self.group = group
        self.ell = ell
        self.label = label
        self.reps = reps      # matrices n*t
        self.exps = exps      # torus exponent tuple per rep

    def __len__(self):
        return len(self.reps)


def decompose_double_coset(group, ell, label):
    """All left cosets of K t(label) K, via generator BFS with HNF keys."""
    key = (group, ell, tuple(label))
    if key in _DECOMP_CACHE:
        return _DECOMP_CACHE[key]
    t = torus_rep(group, label, ell)
    gens = k_generators(group, ell)
    seen = {coset_key(t, ell): t}
    frontier = [t]
    while frontier:
        nxt = []
        for g in frontier:
            for u in gens:
                h = mat_mul(u, g)
                k = coset_key(h, ell)
                if k not in seen:
                    if len(seen) >= MAX_COSETS:
                        raise EnumerationBoundExceeded(f"{label} at ell={ell}")
                    seen[k] = h
                    nxt.append(h)
        frontier = nxt
    reps, exps = [], []
    for g in seen.values():
        got = cartan_label(g, ell)
        assert tuple(got) == tuple(label), f"label drift: {got} != {label}"
        if group == "gl2":
            e, n, _ = iwasawa_borel(g, ell)
            tmat = torus_gl2(e, ell)
        else:
            e, n, _ = iwasawa_borel(g, ell)
            tmat = mat([[Fraction(ell) ** e[i] if i == j else 0 for j in range(4)]
                        for i in range(4)])
        reps.append(mat_mul(n, tmat))
        exps.append(tuple(e))
    out = CosetList(group, ell, tuple(label), reps, exps)
    _DECOMP_CACHE[key] = out
    return out


def _residue_fractions(ell, radius):
    out = [Fraction(0)]
    for m in range(radius + 1):
        for r in range(ell ** (radius + 1)):
            x = Fraction(r, ell ** m)
            if x not in out:
                out.append(x)
    return out


def decompose_by_residues(group, ell, label, radius=1):
    """Independent oracle: enumerate Borel-form candidates and deduplicate.

    Exhaustive for the small operators it is used on (tests certify the
    count agrees under radius increase and with the BFS route).
    """
    tag = Tag("K")
    found = []
    if group == "gl2":
        e1, e2 = label
        diag_choices = [(f1, e1 + e2 - f1) for f1 in range(min(e1, e2), max(e1, e2) + 1)]
        xs = _residue_fractions(ell, radius)
        for f1, f2 in diag_choices:
            for x in xs:
                cand = mat([[Fraction(ell) ** f1, x * Fraction(ell) ** f2],
                            [0, Fraction(ell) ** f2]])
                try:
                    if cartan_label(cand, ell) != tuple(label):
                        continue
                except Exception:
                    continue
                if not any(coset_equal(r, cand, tag, ell) for r in found):
                    found.append(cand)
        return found
    a, b, c = label
    lo, hi = min(0, c - a, c - b, b), max(a, b, c - b, c - a)
    xs = _residue_fractions(ell, radius)
    diags = []
    for f1 in range(lo, hi + 1):
        for f2 in range(lo, hi + 1):
            for f3 in range(lo, hi + 1):
                f4 = c - f1
                if f2 + f3 == c and sorted((f1, f2, f3, f4)) == sorted((a, b, c - a, c - b)):
                    diags.append((f1, f2, f3, f4))
    for d in diags:
        tmat = mat([[Fraction(ell) ** d[i] if i == j else 0 for j in range(4)] for i in range(4)])
        for x in xs:
            for y in xs:
                for z in xs:
                    for w in xs:
                        n = mat_mul(mat_mul(root_unipotent(0, x), root_unipotent(1, y)),
                                    mat_mul(root_unipotent(2, z), root_unipotent(3, w)))
                        cand = mat_mul(n, tmat)
                        try:
                            if cartan_label(cand, ell) != tuple(label):
                                continue
                        except Exception:
                            continue
                        if not any(coset_equal(r, cand, tag, ell) for r in found):
                            found.append(cand)
    return found


# ---------------------------------------------------------------------------
# the spherical Hecke algebra as formal sums of labels

class HeckeOp:
    """Finite Q-linear combination of double cosets, keyed by Cartan label."""

    __slots__ = ("group", "ell", "terms")

    def __init__(self, group, ell, terms=None):
        self.group = group
        self.ell = ell
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tuple(k)] = self.terms.get(tuple(k), Fraction(0)) + c

    @staticmethod
    def char_identity(group, ell):
        label = (0, 0) if group == "gl2" else (0, 0, 0)
        return HeckeOp(group, ell, {label: 1})

    def __add__(self, other):
        assert (self.group, self.ell) == (other.group, other.ell)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return HeckeOp(self.group, self.ell, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return HeckeOp(self.group, self.ell, {k: v * Fraction(c) for k, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, HeckeOp) and self.group == other.group
                and self.ell == other.ell and self.terms == {k: v for k, v in other.terms.items()})

    def __repr__(self):
        return f"HeckeOp({self.group}, ell={self.ell}, {self.terms})"


def hecke_T(ell):
    return HeckeOp("gl2", ell, {(1, 0): 1})


def hecke_S(ell):
    return HeckeOp("gl2", ell, {(1, 1): 1})


def hecke_T4(ell):  # script T: K diag(l,l,1,1) K
    return HeckeOp("gsp4", ell, {(1, 1, 1): 1})


def hecke_R4(ell):  # script R: K diag(l^2,l,l,1) K
    return HeckeOp("gsp4", ell, {(2, 1, 2): 1})


def hecke_S4(ell):  # script S: central diag(l,l,l,l)
    return HeckeOp("gsp4", ell, {(1, 1, 2): 1})


def convolve(a, b):
    """Convolution with vol(K) = 1, computed from left-coset products."""
    assert (a.group, a.ell) == (b.group, b.ell)
    ell = a.ell
    out = {}
    for la, ca in a.terms.items():
        da = decompose_double_coset(a.group, ell, la)
        for lb, cb in b.terms.items():
            db = decompose_double_coset(b.group, ell, lb)
            counts = {}
            for x in da.reps:
                for y in db.reps:
                    lab = cartan_label(mat_mul(x, y), ell)
                    counts[lab] = counts.get(lab, 0) + 1
            for lab, cnt in counts.items():
                ncos = len(decompose_double_coset(a.group, ell, lab))
                q, r = divmod(cnt, ncos)
                assert r == 0, "product multiset not coset-uniform"
                out[lab] = out.get(lab, Fraction(0)) + ca * cb * q
    return HeckeOp(a.group, a.ell, out)
