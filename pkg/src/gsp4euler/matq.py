"""Exact matrix arithmetic for GL2(Q_ell) and GSp4(Q_ell).

The symplectic form is the antidiagonal J with J[0][3] = J[1][2] = 1,
J[2][1] = J[3][0] = -1, so GSp4 = {g : g^t J g = mu(g) J} and the
similitude mu of a diagonal element diag(t1, t2, t3, t4) is t1 t4 = t2 t3.
H = GL2 x_{GL1} GL2 sits inside GSp4 by the corner/middle embedding.

Matrices are tuples of tuples of Fractions.  Everything here is pure and
exact; the prime ell is passed to the predicates that need it.
"""

from fractions import Fraction
from math import inf


class NotSymplectic(Exception):
    pass


class DeterminantMismatch(Exception):
    pass


def mat(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n):
    return mat([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
                 for i in range(n))


def mat_scal(a, c):
    c = Fraction(c)
    return tuple(tuple(x * c for x in row) for row in a)


def transpose(a):
    return tuple(zip(*a))


def det(a):
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = Fraction(0)
    for j in range(n):
        if a[0][j] == 0:
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in a[1:])
        total += (-1) ** j * a[0][j] * det(minor)
    return total


def mat_inv(a):
    n = len(a)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        d = aug[col][col]
        aug[col] = [x / d for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def val(x, ell):
    """ell-adic valuation of a Fraction; val(0) = +inf."""
    x = Fraction(x)
    if x == 0:
        return inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % ell == 0:
        num //= ell
        v += 1
    while den % ell == 0:
        den //= ell
        v -= 1
    return v


def min_val(a, ell):
    return min(val(x, ell) for row in a for x in row)


def denom_exponent(a, ell):
    """Largest k with ell^k * a integral at ell (0 if already integral)."""
    m = min_val(a, ell)
    return 0 if m is inf or m >= 0 else -int(m)


def is_integral(a, ell):
    return all(val(x, ell) >= 0 for row in a for x in row)


def is_unit(x, ell):
    return val(x, ell) == 0


J4 = mat([[0, 0, 0, 1],
          [0, 0, 1, 0],
          [0, -1, 0, 0],
          [-1, 0, 0, 0]])


def multiplier(g):
    """Similitude factor mu(g) with g^t J g = mu J; NotSymplectic otherwise."""
    m = mat_mul(mat_mul(transpose(g), J4), g)
    mu = m[0][3]
    if m != mat_scal(J4, mu) or mu == 0:
        raise NotSymplectic(f"g^tJg is not a multiple of J")
    return mu


def is_gsp4(g):
    try:
        multiplier(g)
        return True
    except NotSymplectic:
        return False


def embed_iota(h1, h2):
    """The embedding H = GL2 x_{GL1} GL2 -> GSp4; requires det h1 = det h2."""
    if det(h1) != det(h2):
        raise DeterminantMismatch("iota needs equal determinants")
    (a1, b1), (c1, d1) = h1
    (a2, b2), (c2, d2) = h2
    return mat([[a1, 0, 0, b1],
                [0, a2, b2, 0],
                [0, c2, d2, 0],
                [c1, 0, 0, d1]])


def split_iota(g):
    """Inverse of embed_iota on its image; None if g is not in the image."""
    z = Fraction(0)
    pattern_zero = [(0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2)]
    if any(g[i][j] != z for i, j in pattern_zero):
        return None
    h1 = mat([[g[0][0], g[0][3]], [g[3][0], g[3][3]]])
    h2 = mat([[g[1][1], g[1][2]], [g[2][1], g[2][2]]])
    if det(h1) != det(h2):
        return None
    return h1, h2


# ---------------------------------------------------------------------------
# subgroup tags

class Tag:
    """Decidable membership predicates for the subgroups used downstream."""

    def __init__(self, kind, e=1):
        self.kind = kind
        self.e = e

    def contains(self, g, ell):
        k = self.kind
        q = ell ** self.e
        if k == "K":  # GL2(Z_ell) or GSp4(Z_ell)
            if not is_integral(g, ell):
                return False
            if len(g) == 2:
                return is_unit(det(g), ell)
            try:
                return is_unit(multiplier(g), ell)
            except NotSymplectic:
                return False
        if not is_integral(g, ell):
            return False
        if k == "K0":  # lower-left entry divisible
            return is_unit(det(g), ell) and val(g[1][0], ell) >= self.e
        if k == "K1":  # [* *; 0 1] mod ell^e
            return (is_unit(det(g), ell)
                    and val(g[1][0], ell) >= self.e
                    and val(g[1][1] - 1, ell) >= self.e)
        if k == "K^1":  # [1 *; 0 *] mod ell^e
            return (is_unit(det(g), ell)
                    and val(g[1][0], ell) >= self.e
                    and val(g[0][0] - 1, ell) >= self.e)
        if k == "IwSL2":  # upper triangular mod ell^e and det 1
            return det(g) == 1 and val(g[1][0], ell) >= self.e
        if k == "H":  # iota(GL2 x_GL1 GL2)(Z_ell)
            parts = split_iota(g)
            if parts is None:
                return False
            h1, h2 = parts
            return (is_integral(h1, ell) and is_integral(h2, ell)
                    and is_unit(det(h1), ell))
        if k == "K10":  # GSp4(Z_ell) with mu = 1 mod ell^e
            if not Tag("K").contains(g, ell):
                return False
            return val(multiplier(g) - 1, ell) >= self.e
        raise ValueError(f"unknown tag {k}")

    def __repr__(self):
        return f"Tag({self.kind}, ell^{self.e})" if self.kind != "K" else "Tag(K)"


def multiplier_and_membership(g, tag, ell):
    """(mu(g), member) for size 4, (det, member) for size 2."""
    mu = multiplier(g) if len(g) == 4 else det(g)
    return mu, tag.contains(g, ell)


def coset_equal(g, h, tag, ell, side="left"):
    if side == "left":
        return tag.contains(mat_mul(mat_inv(g), h), ell)
    return tag.contains(mat_mul(h, mat_inv(g)), ell)


# ---------------------------------------------------------------------------
# Smith invariants over Z_(ell) and Cartan labels

def smith_invariants(g, ell):
    """Valuations of the elementary divisors over Z_(ell), ascending."""
    a = [list(row) for row in g]
    n = len(a)
    out = []
    rows = list(range(n))
    cols = list(range(n))
    while rows:
        piv = min(((i, j) for i in rows for j in cols), key=lambda ij: val(a[ij[0]][ij[1]], ell))
        i0, j0 = piv
        p = a[i0][j0]
        assert p != 0, "singular matrix has no Smith invariants here"
        out.append(int(val(p, ell)))
        for i in rows:
            if i != i0 and a[i][j0] != 0:
                f = a[i][j0] / p
                for j in cols:
                    a[i][j] -= f * a[i0][j]
        for j in cols:
            if j != j0 and a[i0][j] != 0:
                f = a[i0][j] / p
                for i in rows:
                    a[i][j] -= f * a[i][j0]
        rows.remove(i0)
        cols.remove(j0)
    return tuple(sorted(out))


class InconsistentInvariants(Exception):
    pass


def cartan_label(g, ell):
    """Double-coset label of g.

    GL2: (e1, e2) with e1 >= e2, K diag(ell^e1, ell^e2) K.
    GSp4: (a, b, c) with divisor multiset {a, b, c-b, c-a} and c = v(mu).
    """
    if len(g) == 2:
        s = smith_invariants(g, ell)
        return (s[1], s[0])
    mu = multiplier(g)
    c = val(mu, ell)
    assert c is not inf
    s = smith_invariants(g, ell)
    a, b = s[3], s[2]
    if (s[0], s[1]) != (c - a, c - b):
        raise InconsistentInvariants(f"divisors {s} vs multiplier valuation {c}")
    if not (a >= b >= c - b):
        raise InconsistentInvariants(f"label ({a},{b},{c}) not dominant")
    return (a, b, int(c))


def torus_gsp4(label, ell):
    """diag(ell^a, ell^b, ell^(c-b), ell^(c-a)) for a label (a, b, c)."""
    a, b, c = label
    q = Fraction(ell)
    return mat([[q ** a, 0, 0, 0],
                [0, q ** b, 0, 0],
                [0, 0, q ** (c - b), 0],
                [0, 0, 0, q ** (c - a)]])


def torus_gl2(label, ell):
    e1, e2 = label
    q = Fraction(ell)
    return mat([[q ** e1, 0], [0, q ** e2]])


# ---------------------------------------------------------------------------
# root data for the upper-triangular Borel of GSp4 (verified at import)

def _root_matrix(positions, c=1):
    m = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    for (i, j, sign) in positions:
        m[i][j] += sign * Fraction(c)
    return tuple(tuple(row) for row in m)


# positive roots: (positions, weight on exponents (e1, e2, c) of the torus)
POSITIVE_ROOTS = (
    ((((0, 1, 1), (2, 3, -1))), "e1-e2"),
    ((((1, 2, 1),)), "2e2-c"),
    ((((0, 2, 1), (1, 3, 1))), "e1+e2-c"),
    ((((0, 3, 1),)), "2e1-c"),
)

NEGATIVE_ROOTS = (
    (((1, 0, 1), (3, 2, -1)),),
    (((2, 1, 1),),),
    (((2, 0, 1), (3, 1, 1)),),
    (((3, 0, 1),),),
)


def root_unipotent(idx, c, sign="+"):
    table = POSITIVE_ROOTS if sign == "+" else NEGATIVE_ROOTS
    return _root_matrix(table[idx][0], c)


def root_weight_on(idx, exps):
    """Pairing of the idx-th positive root with torus exponents (e1, e2, c)."""
    e1, e2, c = exps
    return (e1 - e2, 2 * e2 - c, e1 + e2 - c, 2 * e1 - c)[idx]


def _weyl_group():
    s1 = mat([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    s2 = mat([[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 0], [0, 0, 0, 1]])
    seen = {identity(4): None}
    frontier = [identity(4)]
    while frontier:
        nxt = []
        for w in frontier:
            for s in (s1, s2):
                ws = mat_mul(w, s)
                if ws not in seen:
                    seen[ws] = None
                    nxt.append(ws)
        frontier = nxt
    return tuple(seen)


WEYL = _weyl_group()

# sanity-check the structural constants once at import
for _i in range(4):
    assert is_gsp4(root_unipotent(_i, 1)), f"positive root {_i} not symplectic"
    assert is_gsp4(root_unipotent(_i, 1, "-")), f"negative root {_i} not symplectic"
for _w in WEYL:
    assert is_gsp4(_w)
# signed permutations must be able to move any column into position 3
_reachable = set()
for _w in WEYL:
    for _j in range(4):
        if _w[_j][3] != 0:
            _reachable.add(_j)
assert _reachable == {0, 1, 2, 3}


def delta_exponent_gsp4(exps):
    """v_ell of the Borel modulus character at torus exponents (e1, e2, c).

    delta(t) = |prod of positive-root values|; returned as the integer n
    with delta = ell^(-n), derived from the root pairings above.
    """
    return sum(root_weight_on(i, exps) for i in range(4))


# ---------------------------------------------------------------------------
# Iwasawa decomposition g = n * t * k

def iwasawa_borel_gl2(g, ell):
    c, d = g[1]
    e = identity(2)
    if val(c, ell) < val(d, ell):
        w = mat([[0, 1], [1, 0]])
        g, e = mat_mul(g, w), mat_mul(e, w)
    c, d = g[1]
    assert d != 0, "singular matrix"
    if c != 0:
        u = mat([[1, 0], [-c / d, 1]])
        g, e = mat_mul(g, u), mat_mul(e, u)
    assert g[1][0] == 0
    exps = (int(val(g[0][0], ell)), int(val(g[1][1], ell)))
    t = torus_gl2(exps, ell)
    units = mat([[g[0][0] / t[0][0], 0], [0, g[1][1] / t[1][1]]])
    n = mat([[1, g[0][1] / g[1][1]], [0, 1]])
    # reduced g = n * t * units, so the original g is n * t * (units * e^{-1})
    k = mat_mul(units, mat_inv(e))
    assert Tag("K").contains(k, ell)
    return exps, n, k


def iwasawa_borel_gsp4(g, ell):
    """g = n * t * k with n in the symplectic unipotent, t diagonal ell
    powers in the GSp4 torus, k in GSp4(Z_ell).

    Column reduction by integral symplectic right operations: a Weyl move
    puts a minimal-valuation entry of the bottom row at position (3, 3);
    three root operations clear the rest of the row; the similitude
    relations then force column 0 and entry (2, 1) patterns so one more
    root operation finishes the triangularisation.
    """
    mu = multiplier(g)
    e = identity(4)

    best = None
    for w in WEYL:
        cand = mat_mul(g, w)
        v = val(cand[3][3], ell)
        if best is None or v < best[0]:
            best = (v, cand, w)
    _, g, w = best
    e = mat_mul(e, w)
    assert g[3][3] != 0, "singular matrix"
    assert val(g[3][3], ell) == min(val(x, ell) for x in g[3])

    def apply(m):
        nonlocal g, e
        g = mat_mul(g, m)
        e = mat_mul(e, m)

    # clear (3,2), then (3,1), then (3,0); coefficients integral by pivoting
    apply(root_unipotent(0, g[3][2] / g[3][3], "-"))      # col2 -= c*col3 via E10-E32 pair
    apply(root_unipotent(2, -g[3][1] / g[3][3], "-"))     # E20+E31 pair
    apply(root_unipotent(3, -g[3][0] / g[3][3], "-"))     # E30
    assert g[3][0] == 0 and g[3][1] == 0 and g[3][2] == 0

    # similitude pairing of rows 1, 2 against the reduced row 3 forces
    # the rest of column 0 to vanish
    assert g[1][0] == 0 and g[2][0] == 0, "symplectic relation violated"

    # row 2: pivot between columns 1, 2 then clear (2,1)
    if val(g[2][1], ell) < val(g[2][2], ell):
        s2 = mat([[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 0], [0, 0, 0, 1]])
        apply(s2)
    assert g[2][2] != 0, "singular matrix"
    apply(root_unipotent(1, -g[2][1] / g[2][2], "-"))     # E21
    assert g[2][1] == 0

    # g is upper triangular now; split diagonal into ell-powers and units
    for i in range(4):
        for j in range(i):
            assert g[i][j] == 0
    exps4 = tuple(int(val(g[i][i], ell)) for i in range(4))
    label_exps = (exps4[0], exps4[1], int(val(mu, ell)))
    assert exps4[0] + exps4[3] == exps4[1] + exps4[2] == label_exps[2], \
        "triangular form not in the similitude torus"
    t = torus_gsp4((label_exps[0], label_exps[1], label_exps[2]), ell)
    units = mat([[g[i][i] / t[i][i] if i == j else 0 for j in range(4)] for i in range(4)])
    n = mat_mul(g, mat_inv(mat_mul(t, units)))
    for i in range(4):
        assert n[i][i] == 1
    k = mat_mul(units, mat_inv(e))
    assert Tag("K").contains(k, ell), "k-part not integral symplectic"
    return label_exps, exps4, n, k


def iwasawa_borel(g, ell):
    """Unified front-end: returns (torus exponents, n, k)."""
    if len(g) == 2:
        return iwasawa_borel_gl2(g, ell)
    label_exps, exps4, n, k = iwasawa_borel_gsp4(g, ell)
    return exps4, n, k
