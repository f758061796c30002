"""Finite abelian groups as products of cyclic factors, plus integer SNF.

Elements are tuples reduced componentwise mod the factor orders.
Characters are given by exponent tuples: chi(g_i) = zeta_{d_i}^{c_i}.
"""

from math import gcd

from .cyclotomic import CycNum


def smith_normal_form(mat):
    """Integer SNF.  Returns (d, U, V) with U*mat*V = diag(d), U, V unimodular."""
    a = [row[:] for row in mat]
    n = len(a)
    m = len(a[0]) if n else 0
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(i, j, c):  # row_i += c*row_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        U[i] = [x + c * y for x, y in zip(U[i], U[j])]

    def add_col(i, j, c):  # col_i += c*col_j
        for r in a:
            r[i] += c * r[j]
        for r in V:
            r[i] += c * r[j]

    t = 0
    while t < min(n, m):
        best = None
        for i in range(t, n):
            for j in range(t, m):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = False
        for i in range(t + 1, n):
            if a[i][t] != 0:
                add_row(i, t, -(a[i][t] // a[t][t]))
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, m):
            if a[t][j] != 0:
                add_col(j, t, -(a[t][j] // a[t][t]))
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        bad = None
        for i in range(t + 1, n):
            if any(a[i][j] % a[t][t] != 0 for j in range(t + 1, m)):
                bad = i
                break
        if bad is not None:
            add_row(t, bad, 1)
            continue
        if a[t][t] < 0:
            add_row(t, t, -2)
        t += 1
    d = [a[i][i] for i in range(min(n, m))]
    return d, U, V


class FinAbGroup:
    """prod_i Z/d_i with labelled generators."""

    def __init__(self, orders, labels=None):
        self.orders = tuple(int(d) for d in orders)
        assert all(d >= 1 for d in self.orders)
        self.labels = tuple(labels) if labels else tuple(f"g{i}" for i in range(len(self.orders)))

    def identity(self):
        return tuple(0 for _ in self.orders)

    def reduce(self, x):
        return tuple(a % d for a, d in zip(x, self.orders))

    def add(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.orders))

    def neg(self, x):
        return tuple((-a) % d for a, d in zip(x, self.orders))

    def mult(self, x, n):
        return tuple((a * n) % d for a, d in zip(x, self.orders))

    def order(self):
        n = 1
        for d in self.orders:
            n *= d
        return n

    def elements(self):
        elts = [()]
        for d in self.orders:
            elts = [e + (k,) for e in elts for k in range(d)]
        return elts

    def element_order(self, x):
        n = 1
        for a, d in zip(x, self.orders):
            if a:
                o = d // gcd(a, d)
                n = n * o // gcd(n, o)
        return n

    def characters(self):
        """All characters, as exponent tuples c with chi(e_i) = zeta_{d_i}^{c_i}."""
        return self.elements()

    def char_value(self, char, x, modulus=None):
        """chi(x) as a CycNum root of unity."""
        m = modulus
        if m is None:
            m = 1
            for d in self.orders:
                m = m * d // gcd(m, d)
        val = CycNum.from_rational(1, m)
        for c, a, d in zip(char, x, self.orders):
            if c and a:
                val = val * CycNum.zeta(m, ((m // d) * c * a) % m)
        return val

    def p_quotient(self, p):
        """Largest quotient of p-power order, with the projection map.

        Z/d surjects onto its p-part Z/p^v by reduction mod p^v; the
        kernel is the unique subgroup of prime-to-p order.
        """
        parts, keep = [], []
        for i, d in enumerate(self.orders):
            v = 1
            while d % (v * p) == 0:
                v *= p
            if v > 1:
                parts.append(v)
                keep.append(i)
        quotient = FinAbGroup(parts, [self.labels[i] for i in keep])

        def project(x):
            return tuple(x[i] % parts[j] for j, i in enumerate(keep))

        return quotient, project

    def __eq__(self, other):
        return isinstance(other, FinAbGroup) and self.orders == other.orders

    def __repr__(self):
        if not self.orders:
            return "FinAbGroup(trivial)"
        return "FinAbGroup(" + " x ".join(f"Z/{d}" for d in self.orders) + ")"


def abelian_structure(elements, op, identity):
    """Cyclic-factor structure of a finite abelian group given by a rule.

    Returns (group, to_coords): FinAbGroup in SNF shape plus the
    coordinate map.  Brute-force, intended for the small groups coming
    from residue rings and class groups (a few thousand elements).
    """
    elements = list(elements)
    n = len(elements)

    gens = []
    span = {identity}
    for e in sorted(elements, key=lambda e: -_elt_order(e, op, identity)):
        if e in span:
            continue
        gens.append(e)
        span = _close(span | {e}, gens, op)
        if len(span) == n:
            break
    assert len(span) == n, "generators do not span"

    orders = [_elt_order(g, op, identity) for g in gens]
    k = len(gens)

    # relation lattice of Z^k ->> group: diag(orders) plus all box vectors
    # hitting the identity (the box covers every coset of diag(orders)Z^k)
    rel = [[orders[i] if i == j else 0 for j in range(k)] for i in range(k)]
    powers = []  # powers[i][a] = a*g_i
    for i, g in enumerate(gens):
        row = [identity]
        for _ in range(orders[i] - 1):
            row.append(op(row[-1], g))
        powers.append(row)
    for vec in _box_iter(orders):
        if not any(vec):
            continue
        e = identity
        for i in range(k):
            e = op(e, powers[i][vec[i]])
        if e == identity:
            rel.append(list(vec))

    # rows of rel span the kernel lattice L; with U*rel*V = D the map
    # x -> (x*V mod d) identifies Z^k/L with the product of the Z/d_j
    d, U, V = smith_normal_form(rel)
    new_orders, keep = [], []
    for j in range(k):
        dj = abs(d[j]) if j < len(d) else 0
        assert dj != 0, "finite group cannot have free part"
        if dj != 1:
            new_orders.append(dj)
            keep.append(j)
    group = FinAbGroup(new_orders)

    # discrete logs of every element w.r.t. the original generators
    logs = {identity: tuple(0 for _ in gens)}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for i, g in enumerate(gens):
                y = op(x, g)
                if y not in logs:
                    v = list(logs[x])
                    v[i] = (v[i] + 1) % orders[i]
                    logs[y] = tuple(v)
                    nxt.append(y)
        frontier = nxt

    def to_coords(e):
        x = logs[e]
        y = [sum(x[i] * V[i][j] for i in range(k)) for j in range(k)]
        return tuple(y[j] % new_orders[idx] for idx, j in enumerate(keep))

    seen = {to_coords(e) for e in elements}
    assert len(seen) == n == group.order(), "structure computation mismatch"
    return group, to_coords


def _close(span, gens, op):
    new = set(span)
    changed = True
    while changed:
        changed = False
        for g in gens:
            add = {op(x, g) for x in new} - new
            if add:
                new |= add
                changed = True
    return new


def _elt_order(e, op, identity):
    n = 1
    acc = e
    while acc != identity:
        acc = op(acc, e)
        n += 1
        assert n < 10 ** 7
    return n


def _box_iter(orders):
    if not orders:
        yield ()
        return
    for rest in _box_iter(orders[1:]):
        for a in range(orders[0]):
            yield (a,) + rest
