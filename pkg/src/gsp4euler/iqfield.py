"""Imaginary quadratic fields: elements, ideals in HNF, splitting, class group.

K = Q(sqrt(D)) for a fundamental discriminant D < 0, with ring of
integers Z[theta], theta = (D + sqrt(D))/2 satisfying
theta^2 - D theta + (D^2 - D)/4 = 0.  Elements are coordinate pairs
(x, y) = x + y theta over Q; ideals are rows [a, b+c*theta] in Hermite
form with c | b, c | a and 0 <= b < a.
"""

from fractions import Fraction
from math import gcd, isqrt

from .cyclotomic import kronecker


class DiscriminantBoundExceeded(Exception):
    pass


def is_fundamental(disc):
    if disc >= 0:
        return False
    if disc % 4 == 1:
        return _squarefree(-disc)
    if disc % 4 == 0:
        m = disc // 4
        return m % 4 in (2, 3) and _squarefree(-m)
    return False


def _squarefree(n):
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


class QuadField:
    __slots__ = ("disc", "theta_norm")

    def __init__(self, disc):
        assert is_fundamental(disc), f"{disc} is not a fundamental discriminant < 0"
        self.disc = disc
        self.theta_norm = (disc * disc - disc) // 4  # theta * conj(theta)

    # elements are (x, y) tuples over Z or Fraction: x + y*theta

    def mul(self, u, v):
        x1, y1 = u
        x2, y2 = v
        d, n0 = self.disc, self.theta_norm
        return (x1 * x2 - y1 * y2 * n0, x1 * y2 + x2 * y1 + y1 * y2 * d)

    def conj(self, u):
        x, y = u
        return (x + y * self.disc, -y)

    def norm(self, u):
        x, y = u
        return x * x + x * y * self.disc + y * y * self.theta_norm

    def trace(self, u):
        return 2 * u[0] + u[1] * self.disc

    def units(self):
        """All units of O_K (roots of unity)."""
        if self.disc == -4:
            i = (2, 1)  # theta + 2 = i
            return [(1, 0), i, (-1, 0), self.mul(i, self.mul(i, i))]
        if self.disc == -3:
            z = (2, 1)  # theta + 2 = zeta_6
            out = [(1, 0)]
            for _ in range(5):
                out.append(self.mul(out[-1], z))
            return out
        return [(1, 0), (-1, 0)]

    def unit_generator(self):
        if self.disc == -4:
            return (2, 1)
        if self.disc == -3:
            return (2, 1)
        return (-1, 0)

    def __repr__(self):
        return f"QuadField({self.disc})"


def _hnf_theta(rows):
    """(a, b, c) with lattice {a, b + c*theta} from integer rows (x, y)."""
    rows = [list(r) for r in rows if r != (0, 0) and r != [0, 0]]
    assert rows
    # pivot on the theta coordinate first
    while True:
        live = [r for r in rows if r[1] != 0]
        if len(live) <= 1:
            break
        live.sort(key=lambda r: abs(r[1]))
        p = live[0]
        for r in live[1:]:
            q = r[1] // p[1]
            r[0] -= q * p[0]
            r[1] -= q * p[1]
        rows = [r for r in rows if r != [0, 0]]
    theta_row = next((r for r in rows if r[1] != 0), None)
    ints = [r[0] for r in rows if r[1] == 0 and r[0] != 0]
    a = 0
    for x in ints:
        a = gcd(a, x)
    assert theta_row is not None and a > 0, "rank-two lattice required"
    if theta_row[1] < 0:
        theta_row = [-theta_row[0], -theta_row[1]]
    b, c = theta_row[0] % a, theta_row[1]
    return (a, b, c)


class IdealHNF:
    __slots__ = ("field", "a", "b", "c")

    def __init__(self, field, a, b, c, check=True):
        self.field = field
        self.a, self.b, self.c = int(a), int(b), int(c)
        if check:
            assert self.a > 0 and self.c > 0 and 0 <= self.b < self.a
            assert self.a % self.c == 0 and self.b % self.c == 0
            assert self.is_module()

    @staticmethod
    def from_rows(field, rows):
        a, b, c = _hnf_theta(rows)
        return IdealHNF(field, a, b, c)

    @staticmethod
    def principal(field, alpha):
        x, y = alpha
        assert field.norm(alpha) != 0
        t = field.mul(alpha, (0, 1))
        return IdealHNF.from_rows(field, [(x, y), t])

    @staticmethod
    def unit_ideal(field):
        return IdealHNF(field, 1, 0, 1)

    def basis(self):
        return [(self.a, 0), (self.b, self.c)]

    def is_module(self):
        # closure under multiplication by theta
        for v in self.basis():
            if not self.contains(self.field.mul(v, (0, 1)), check=False):
                return False
        return True

    def contains(self, u, check=True):
        x, y = u
        if y % self.c:
            return False
        q = y // self.c
        return (x - q * self.b) % self.a == 0

    def norm(self):
        return self.a * self.c

    def __mul__(self, other):
        assert self.field is other.field or self.field.disc == other.field.disc
        rows = []
        for u in self.basis():
            for v in other.basis():
                rows.append(self.field.mul(u, v))
        return IdealHNF.from_rows(self.field, rows)

    def __pow__(self, n):
        assert n >= 0
        out = IdealHNF.unit_ideal(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self):
        return IdealHNF.from_rows(self.field, [self.field.conj(v) for v in self.basis()])

    def add(self, other):
        return IdealHNF.from_rows(self.field, self.basis() + other.basis())

    def is_coprime(self, other):
        s = self.add(other)
        return (s.a, s.b, s.c) == (1, 0, 1)

    def divides(self, other):
        """self | other, i.e. other is contained in self."""
        return all(self.contains(v) for v in other.basis())

    def valuation(self, prime_ideal):
        v = 0
        power = prime_ideal
        while power.divides(self):
            v += 1
            power = power * prime_ideal
        return v

    def generator_if_principal(self):
        """An element alpha with (alpha) = self, or None."""
        n = self.norm()
        d = -self.field.disc
        ymax = isqrt(4 * n // d) + 1
        for y in range(-ymax, ymax + 1):
            # norm(x + y theta) = x^2 + D x y + n0 y^2 = n: solve for x
            bq = self.field.disc * y
            cq = self.field.theta_norm * y * y - n
            disc_q = bq * bq - 4 * cq
            if disc_q < 0:
                continue
            r = isqrt(disc_q)
            if r * r != disc_q:
                continue
            for sgn in (1, -1):
                num = -bq + sgn * r
                if num % 2:
                    continue
                x = num // 2
                alpha = (x, y)
                if self.field.norm(alpha) == n and self.contains(alpha):
                    if IdealHNF.principal(self.field, alpha) == self:
                        return alpha
        return None

    def reduce_element(self, u):
        """Canonical representative of u modulo this ideal."""
        x, y = u
        q = y // self.c
        y -= q * self.c
        x -= q * self.b
        return (x % self.a, y)

    def residues(self):
        return [(x, y) for x in range(self.a) for y in range(self.c)]

    def __eq__(self, other):
        return (isinstance(other, IdealHNF)
                and self.field.disc == other.field.disc
                and (self.a, self.b, self.c) == (other.a, other.b, other.c))

    def __hash__(self):
        return hash((self.field.disc, self.a, self.b, self.c))

    def __repr__(self):
        return f"IdealHNF[{self.a}, {self.b}+{self.c}theta]"


def split_prime(field, ell):
    """('split', l, lbar) | ('inert', None, None) | ('ramified', l, None)."""
    d, n0 = field.disc, field.theta_norm
    roots = [r for r in range(ell) if (r * r - d * r + n0) % ell == 0]
    if not roots:
        return ("inert", None, None)
    mk = lambda r: IdealHNF.from_rows(field, [(ell, 0), (-r % ell if ell > 1 else 0, 1)])
    if len(roots) == 1:
        return ("ramified", mk(roots[0]), None)
    p1, p2 = mk(roots[0]), mk(roots[1])
    assert p1 * p2 == IdealHNF.principal(field, (ell, 0))
    return ("split", p1, p2)


def prime_ideals_above(field, p):
    kind, p1, p2 = split_prime(field, p)
    if kind == "inert":
        return [IdealHNF.principal(field, (p, 0))], kind
    if kind == "ramified":
        return [p1], kind
    return [p1, p2], kind


def reduced_forms(disc):
    """Reduced primitive binary quadratic forms of the discriminant."""
    out = []
    b = disc % 2
    while b * b <= -disc // 3 + 1:
        rem = b * b - disc
        if rem % 4 == 0:
            ac = rem // 4
            a = max(b, 1)
            while a * a <= ac:
                if a != 0 and ac % a == 0:
                    c = ac // a
                    if a <= c and gcd(gcd(a, abs(b)), c) == 1 and a >= abs(b):
                        out.append((a, b, c))
                        if 0 < abs(b) < a < c:
                            out.append((a, -b, c))
                a += 1
        b += 2
    return sorted(out)


def class_number(disc):
    return len(reduced_forms(disc))


MAX_DISC = 4000


def class_group(field):
    """(FinAbGroup, representative ideals for each generator, classify fn).

    Classes are built by multiplying small prime ideals and testing
    principality of I * conj(J); the cyclic structure comes from the
    generic finite-abelian-structure routine, cross-checked against the
    reduced-form count.
    """
    if -field.disc > MAX_DISC:
        raise DiscriminantBoundExceeded(str(field.disc))
    h = class_number(field.disc)
    one = IdealHNF.unit_ideal(field)
    reps = [one]

    def same_class(i1, i2):
        return (i1 * i2.conj()).generator_if_principal() is not None

    def classify(ideal):
        for idx, r in enumerate(reps):
            if same_class(ideal, r):
                return idx
        reps.append(ideal)
        return len(reps) - 1

    p = 2
    frontier = [one]
    while len(reps) < h:
        primes, kind = prime_ideals_above(field, p)
        if kind != "inert":
            for pr in primes:
                new = []
                for r in list(reps):
                    idx = classify(r * pr)
                    if idx == len(reps) - 1:
                        new.append(reps[idx])
        p += 1
        assert p < 1000, "class group generation runaway"
    assert len(reps) == h

    mult = {}
    for i in range(h):
        for j in range(h):
            mult[(i, j)] = classify(reps[i] * reps[j])
    assert len(reps) == h, "closure failed"

    from .abgroup import abelian_structure
    group, coords = abelian_structure(list(range(h)), lambda i, j: mult[(i, j)], 0)

    # a representative ideal per group generator
    gen_reps = []
    for k in range(len(group.orders)):
        target = tuple(int(k == j) for j in range(len(group.orders)))
        idx = next(i for i in range(h) if coords(i) == target)
        gen_reps.append(reps[idx])

    def ideal_class_coords(ideal):
        return coords(classify(ideal))

    return group, gen_reps, ideal_class_coords
