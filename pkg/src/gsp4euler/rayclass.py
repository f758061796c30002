"""Ray class groups H_n of an imaginary quadratic field, with discrete logs.

Built from the exact sequence

    O_K^x -> (O_K/n)^x -> H_n -> Cl_K -> 1

by presenting H_n on generators (an SNF basis of the unit-quotient Q
plus lifts of class-group generators) and running the relation matrix
through integer Smith normal form.  dlog factors an ideal into primes
and accumulates cached prime logs.
"""

from math import gcd

from .abgroup import FinAbGroup, abelian_structure, smith_normal_form
from .iqfield import IdealHNF, class_group, prime_ideals_above


def group_from_relations(ngens, relations):
    """(FinAbGroup, coord map on exponent vectors) for Z^n modulo rows."""
    rel = [list(r) for r in relations]
    if not rel:
        rel = [[0] * ngens]
    d, U, V = smith_normal_form(rel)
    ds = [abs(d[j]) if j < len(d) else 0 for j in range(ngens)]
    orders, keep = [], []
    for j in range(ngens):
        assert ds[j] != 0, "infinite quotient: missing relations"
        if ds[j] != 1:
            orders.append(ds[j])
            keep.append(j)
    group = FinAbGroup(orders)

    def coords(vec):
        y = [sum(vec[i] * V[i][j] for i in range(ngens)) for j in range(ngens)]
        return tuple(y[j] % orders[idx] for idx, j in enumerate(keep))

    return group, coords


class RayClassGroup:
    """H_n together with the ideal discrete-log map."""

    def __init__(self, field, modulus):
        self.field = field
        self.modulus = modulus

        # unit group of the residue ring ((0,0) is the sole residue mod (1))
        if modulus.norm() == 1:
            residues = [(0, 0)]
        else:
            residues = [u for u in modulus.residues() if u != (0, 0)
                        and IdealHNF.principal(field, u).is_coprime(modulus)]
        residues = [modulus.reduce_element(u) for u in residues]
        self.residue_units = residues

        def rmul(u, v):
            return modulus.reduce_element(field.mul(u, v))

        ring_units, ring_coords = abelian_structure(residues, rmul, modulus.reduce_element((1, 0)))
        self.ring_units = ring_units
        self._ring_coords = ring_coords

        # quotient by the image of the global units
        unit_images = {modulus.reduce_element(u) for u in field.units()}
        cosets = {}
        for u in residues:
            key = frozenset(rmul(u, e) for e in unit_images)
            cosets.setdefault(key, u)
        coset_keys = list(cosets)

        def qmul(k1, k2):
            u = rmul(cosets[k1], cosets[k2])
            return frozenset(rmul(u, e) for e in unit_images)

        ident = frozenset(unit_images)
        q_group, q_coords = abelian_structure(coset_keys, qmul, ident)
        self._qcoords = lambda u: q_coords(frozenset(rmul(u, e) for e in unit_images))
        self.unit_quotient = q_group

        # class group data, with generator representatives coprime to n
        cl, cl_reps, cl_coords = class_group(field)
        cl_reps = [self._coprime_representative(r) for r in cl_reps]
        self.cl = cl
        self.cl_reps = cl_reps
        self._cl_coords = cl_coords

        s, t = len(q_group.orders), len(cl.orders)
        relations = []
        for i, q in enumerate(q_group.orders):
            relations.append([q if j == i else 0 for j in range(s)] + [0] * t)
        for j, o in enumerate(cl.orders):
            power = cl_reps[j] ** o
            gen = power.generator_if_principal()
            assert gen is not None, "class order mismatch"
            qv = self._qcoords(modulus.reduce_element(gen))
            row = [-x for x in qv] + [0] * t
            row[s + j] = o
            relations.append(row)
        self.group, self._coords = group_from_relations(s + t, relations)
        self._s, self._t = s, t
        self._prime_log_cache = {}

        # order cross-check: |H_n| = h * |(O/n)^x| / |unit image|
        expected = (cl.order() * ring_units.order()) // (ring_units.order() // q_group.order())
        expected = cl.order() * q_group.order()
        assert self.group.order() == expected

    def _coprime_representative(self, ideal):
        """An ideal in the same class, coprime to the modulus."""
        if ideal.is_coprime(self.modulus):
            return ideal
        p = 2
        while p < 5000:
            for pr in prime_ideals_above(self.field, p)[0]:
                if pr.is_coprime(self.modulus) and \
                        (ideal * pr.conj()).generator_if_principal() is not None:
                    return pr
            p += 1
        raise AssertionError("no coprime representative found")

    def _embed_residue(self, u):
        qv = self._qcoords(u)
        return self._coords(list(qv) + [0] * self._t)

    def _prime_log(self, prime_ideal):
        key = (prime_ideal.a, prime_ideal.b, prime_ideal.c)
        if key in self._prime_log_cache:
            return self._prime_log_cache[key]
        assert prime_ideal.is_coprime(self.modulus), "ideal shares a factor with the modulus"
        # find w with prime * prod reps^w principal
        h = self.cl.order()
        from itertools import product as iproduct
        for w in iproduct(*(range(o) for o in self.cl.orders)) if self.cl.orders else [()]:
            cand = prime_ideal
            for j, repj in enumerate(self.cl_reps):
                cand = cand * repj ** w[j]
            gen = cand.generator_if_principal()
            if gen is not None:
                qv = self._qcoords(self.modulus.reduce_element(gen))
                vec = list(qv) + [-x for x in w]
                out = self._coords(vec)
                self._prime_log_cache[key] = out
                return out
        raise AssertionError("class search failed")

    def dlog(self, ideal):
        """Image of a coprime-to-n ideal in H_n."""
        assert ideal.is_coprime(self.modulus)
        out = self.group.identity()
        rest = ideal
        n = ideal.norm()
        p = 2
        while n > 1:
            if n % p:
                p += 1
                continue
            for pr in prime_ideals_above(self.field, p)[0]:
                v = ideal.valuation(pr)
                if v:
                    out = self.group.add(out, self.group.mult(self._prime_log(pr), v))
                    n //= pr.norm() ** v
            p += 1
            assert p < 10 ** 6
        return out

    def dlog_element(self, alpha):
        """dlog of the principal ideal (alpha), via the residue embedding."""
        return self._embed_residue(self.modulus.reduce_element(alpha))
