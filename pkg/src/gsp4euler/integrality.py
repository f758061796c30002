"""Congruence-subgroup containment and volume bookkeeping checks.

Everything is verified by exhaustive residue enumeration (depth ell^3
for the conjugation containments, which is enough because the
conjugating elements move congruences by at most ell^2), using plain
integer arithmetic in the hot loops.

The three parts:

  (a) K1(ell^2) x_GL1 K^1(ell^2) stabilises phi_(ell,2) = ch(ell^2 Z x (1 + ell^2 Z))
      through the first-projection right-translation action;
  (b) conjugating the embedded pair by (eta, m) lands in
      GSp4(Z_ell) x K1(ell), for both m = [[0,-1],[l^2,0]], [[0,-l],[l^2,0]];
  (c) the inverse volume ell^4 (ell^2-1)^2 (an honest coset count)
      agrees with C_ell/(ell-1) = ell^3 (ell-1)^2 (ell+1)^2 up to one
      power of ell, and ell V^2/(ell-1) = 1/C_ell identically.
"""

from fractions import Fraction

from .laurent import Laurent, PolyX


def c_ell(ell):
    return ell ** 3 * (ell - 1) ** 3 * (ell + 1) ** 2


def _units(q, ell):
    return [x for x in range(q) if x % ell]


def _k1_residues(ell, depth):
    """K1(ell^2) matrices mod ell^depth (depth >= 2)."""
    q = ell ** depth
    qq = ell ** 2
    out = []
    for a in _units(q, ell):
        for b in range(q):
            for c in range(0, q, qq):
                for d in range(1, q, qq):
                    out.append((a, b, c, d))
    return out


def _kup_residues_by_det(ell, depth):
    """K^1(ell^2) matrices mod ell^depth, grouped by determinant residue."""
    q = ell ** depth
    qq = ell ** 2
    table = {}
    for a in range(1, q, qq):
        for b in range(q):
            for c in range(0, q, qq):
                for d in _units(q, ell):
                    det = (a * d - b * c) % q
                    table.setdefault(det, []).append((a, b, c, d))
    return table


def stabilizer_check(ell):
    """Part (a): phi_(ell,2) is fixed by right translation by K1(ell^2)."""
    q = ell ** 2
    support = {(0 % q, 1 % q)}
    ok = True
    scanned = 0
    for (a, b, c, d) in _k1_residues(ell, 2):
        for v1 in range(q):
            for v2 in range(q):
                w = ((v1 * a + v2 * c) % q, (v1 * b + v2 * d) % q)
                if ((v1 % q, v2 % q) in support) != (w in support):
                    ok = False
        scanned += 1
    return {"ok": ok, "elements": scanned}


def conjugation_check(ell):
    """Part (b): (eta, m)^-1 (iota(h1, h2), h2) (eta, m) integral of level
    GSp4(Z_ell) x K1(ell), swept over the full subgroup mod ell^3.

    The GSp4 condition reduces to ell^2 | (ell^2 X + ell (X N - N X) - N X N)
    for X = iota(h1, h2) and N = E02 + E13 (so eta = 1 + N/ell); the GL2
    condition is checked from adj(m) h2 m against det(m).
    """
    q = ell ** 3
    qq = ell ** 2
    h1s = _k1_residues(ell, 3)
    h2s = _kup_residues_by_det(ell, 3)

    ms = [((0, -1), (ell ** 2, 0)), ((0, -ell), (ell ** 2, 0))]
    madj = []
    for m in ms:
        (m00, m01), (m10, m11) = m
        detm = m00 * m11 - m01 * m10
        adj = ((m11, -m01), (-m10, m00))
        madj.append((m, adj, detm))

    pairs = 0
    ok = True
    for (a1, b1, c1, d1) in h1s:
        det1 = (a1 * d1 - b1 * c1) % q
        for (a2, b2, c2, d2) in h2s.get(det1, ()):
            pairs += 1
            # X = iota(h1, h2); only the eight nonzero entries matter
            # rows of X: (a1,0,0,b1),(0,a2,b2,0),(0,c2,d2,0),(c1,0,0,d1)
            # X N has col2 = X col0, col3 = X col1
            # N X has row0 = X row2, row1 = X row3
            # integrality of eta^-1 X eta: qq | qq*X + ell*(XN - NX) - NXN
            XN = ((0, 0, a1, 0), (0, 0, 0, a2), (0, 0, 0, c2), (0, 0, c1, 0))
            NX = ((0, c2, d2, 0), (c1, 0, 0, d1), (0, 0, 0, 0), (0, 0, 0, 0))
            NXN = ((0, 0, 0, 0), (0, 0, c1, 0), (0, 0, 0, 0), (0, 0, 0, 0))
            X = ((a1, 0, 0, b1), (0, a2, b2, 0), (0, c2, d2, 0), (c1, 0, 0, d1))
            good = True
            for i in range(4):
                for j in range(4):
                    y = qq * X[i][j] + ell * (XN[i][j] - NX[i][j]) - NXN[i][j]
                    if y % qq:
                        good = False
                        break
                if not good:
                    break
            if not good:
                ok = False
                continue
            for m, adj, detm in madj:
                # m^-1 h2 m = adj h2 m / detm must be in K1(ell)
                h2m = ((a2, b2), (c2, d2))
                t = _mul2(adj, _mul2(h2m, m))
                if any(t[i][j] % detm for i in range(2) for j in range(2)):
                    ok = False
                    continue
                cc = (t[1][0] // detm) % ell
                dd = (t[1][1] // detm) % ell
                if cc != 0 or dd != 1:
                    ok = False
    return {"ok": ok, "pairs": pairs}


def _mul2(x, y):
    return ((x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
            (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]))


def volume_index_check(ell):
    """Part (c): the coset count behind vol^-1, then the C_ell comparison.

    |GL2(Z/ell^2)| is enumerated directly; |H| and the subgroup order
    follow by fiber-product counting.  The resulting index must be
    ell^4 (ell^2 - 1)^2 and differ from C_ell/(ell - 1) by ell^(-1).
    """
    q = ell ** 2
    n_gl2 = sum(1 for a in range(q) for b in range(q) for c in range(q) for d in range(q)
                if (a * d - b * c) % ell)
    phi = q - q // ell
    n_h = n_gl2 * n_gl2 // phi
    n_k1 = len(_k1_residues(ell, 2))
    n_sub = n_k1 * (ell ** 2)  # matching-determinant K^1 slice has ell^2 elements
    index = Fraction(n_h, n_sub)
    predicted = ell ** 4 * (ell ** 2 - 1) ** 2
    ratio = Fraction(c_ell(ell), ell - 1) / index
    # ratio must be a signed power of ell
    r = ratio
    power = 0
    while r.numerator % ell == 0:
        r /= ell
        power += 1
    while r.denominator % ell == 0:
        r *= ell
        power -= 1
    return {
        "index": int(index),
        "index_ok": index == predicted,
        "c_ell_over_index": str(ratio),
        "power_of_ell": ratio == Fraction(ell) ** power,
        "exponent": power,
    }


def integrality_volume_check(ell):
    a = stabilizer_check(ell)
    b = conjugation_check(ell)
    c = volume_index_check(ell)
    return {
        "ell": ell,
        "stabilizer": a,
        "conjugation": b,
        "volume": c,
        "pass": a["ok"] and b["ok"] and c["index_ok"] and c["power_of_ell"],
    }


def volume_algebra_check(ell=None):
    """ell V^2/(ell - 1) = 1/C_ell with V = ell^-2 (ell^2 - 1)^-1.

    Numeric for a given ell; symbolic (cross-multiplied Laurent identity
    in the variable "ell") when ell is None.
    """
    if ell is not None:
        V = Fraction(1, ell ** 2 * (ell ** 2 - 1))
        lhs = ell * V * V / (ell - 1)
        return {"ell": ell, "lhs": str(lhs), "rhs": str(Fraction(1, c_ell(ell))),
                "pass": lhs == Fraction(1, c_ell(ell))}
    L = Laurent.var("ell")
    one = Laurent.const(Fraction(1))
    c_sym = L ** 3 * (L - one) ** 3 * (L + one) ** 2
    vinv = L ** 2 * (L * L - one)          # 1/V
    lhs = L * c_sym                        # cross-multiplied: ell * C = (ell - 1) V^-2
    rhs = (L - one) * vinv * vinv
    return {"ell": "symbolic", "pass": lhs == rhs}
