"""Pure-Python matrix kernels (fallback for the compiled extension).

Matrices are flat row-major 16-tuples of Python ints.  These two
functions are the hot inner loop of the coset-orbit sweeps; the Cython
twin in _kernel_c.pyx implements exactly the same contract.
"""

BACKEND = "python"


def mat4_mul_mod(a, b, mod):
    """(a @ b) mod `mod`, flat 16-tuples."""
    out = [0] * 16
    for i in range(4):
        i4 = 4 * i
        ai0, ai1, ai2, ai3 = a[i4], a[i4 + 1], a[i4 + 2], a[i4 + 3]
        for j in range(4):
            out[i4 + j] = (ai0 * b[j] + ai1 * b[4 + j]
                           + ai2 * b[8 + j] + ai3 * b[12 + j]) % mod
    return tuple(out)


def mat4_mulvec_count_zero_mod(a, bs, mod):
    """Number of matrices b in bs with (a @ b) == 0 mod `mod`."""
    n = 0
    for b in bs:
        if all(x == 0 for x in mat4_mul_mod(a, b, mod)):
            n += 1
    return n


def lattice_key_mod(flat, ell, k):
    """Canonical form of the column span of a flat 4x4 matrix over Z/ell^k.

    Howell-style echelon over the local ring: for each row pick the
    column whose entry has least ell-valuation, normalise it by a unit
    so the pivot is exactly ell^a, eliminate, and append ell^(k-a) times
    the pivot column (the annihilator contribution).  Below-pivot
    entries are then reduced modulo the later pivots.  The result is a
    complete invariant of the module spanned by the columns plus
    ell^k Z^4, i.e. of the coset g K when k exceeds the largest
    elementary divisor valuation.
    """
    mod = ell ** k
    work = [[flat[4 * i + j] % mod for i in range(4)] for j in range(4)]
    out = []
    for r in range(4):
        best, besta = -1, k
        for idx in range(len(work)):
            x = work[idx][r]
            if x == 0:
                continue
            a = 0
            while x % ell == 0:
                x //= ell
                a += 1
            if a < besta:
                besta, best = a, idx
        if best < 0:
            out.append([0, 0, 0, 0])
            continue
        p = work.pop(best)
        a = besta
        pa = ell ** a
        uin = pow(p[r] // pa, -1, mod)
        p = [(x * uin) % mod for x in p]
        for c in work:
            if c[r]:
                q = c[r] // pa
                for i in range(4):
                    c[i] = (c[i] - q * p[i]) % mod
        extra = [(x * (mod // pa)) % mod for x in p]
        if any(extra):
            work.append(extra)
        out.append(p)
    for r in range(4):
        col = out[r]
        for rp in range(r + 1, 4):
            piv = out[rp][rp]
            if piv:
                q = col[rp] // piv
                if q:
                    for i in range(4):
                        col[i] = (col[i] - q * out[rp][i]) % mod
    return tuple(x for col in out for x in col)
