# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernel_py: flat 4x4 integer matmul mod small moduli.

Uses C int64 when the modulus is small enough that no intermediate can
overflow (mod < 2^29 gives 4 * mod^2 < 2^63); falls back to Python-int
arithmetic otherwise so the contract is identical for any modulus.
"""

BACKEND = "cython"

DEF SMALL_LIMIT = 536870912  # 2^29


def mat4_mul_mod(a, b, mod):
    cdef long long m = 0
    cdef long long av[16]
    cdef long long bv[16]
    cdef long long ov[16]
    cdef int i, j, i4
    if mod < SMALL_LIMIT:
        m = mod
        for i in range(16):
            av[i] = a[i] % m
            bv[i] = b[i] % m
        for i in range(4):
            i4 = 4 * i
            for j in range(4):
                ov[i4 + j] = (av[i4] * bv[j] + av[i4 + 1] * bv[4 + j]
                              + av[i4 + 2] * bv[8 + j] + av[i4 + 3] * bv[12 + j]) % m
        return (ov[0], ov[1], ov[2], ov[3], ov[4], ov[5], ov[6], ov[7],
                ov[8], ov[9], ov[10], ov[11], ov[12], ov[13], ov[14], ov[15])
    out = [0] * 16
    for i in range(4):
        i4 = 4 * i
        for j in range(4):
            out[i4 + j] = (a[i4] * b[j] + a[i4 + 1] * b[4 + j]
                           + a[i4 + 2] * b[8 + j] + a[i4 + 3] * b[12 + j]) % mod
    return tuple(out)


def mat4_mulvec_count_zero_mod(a, bs, mod):
    cdef long long m = 0
    cdef long long av[16]
    cdef long long bv[16]
    cdef long long acc
    cdef int i, j, i4, nonzero
    cdef long long n = 0
    if mod < SMALL_LIMIT:
        m = mod
        for i in range(16):
            av[i] = a[i] % m
        for b in bs:
            for i in range(16):
                bv[i] = b[i] % m
            nonzero = 0
            for i in range(4):
                i4 = 4 * i
                for j in range(4):
                    acc = (av[i4] * bv[j] + av[i4 + 1] * bv[4 + j]
                           + av[i4 + 2] * bv[8 + j] + av[i4 + 3] * bv[12 + j]) % m
                    if acc != 0:
                        nonzero = 1
                        break
                if nonzero:
                    break
            if not nonzero:
                n += 1
        return n
    count = 0
    for b in bs:
        if all(x == 0 for x in mat4_mul_mod(a, b, mod)):
            count += 1
    return count


cdef long long _inv_mod(long long u, long long mod):
    # extended Euclid; u is a unit mod `mod`
    cdef long long r0 = mod, r1 = u % mod
    cdef long long s0 = 0, s1 = 1
    cdef long long q, t
    while r1 != 0:
        q = r0 // r1
        t = r0 - q * r1; r0 = r1; r1 = t
        t = s0 - q * s1; s0 = s1; s1 = t
    return s0 % mod


def lattice_key_mod(flat, ell, k):
    """Same contract as the pure-Python twin (see _kernel_py)."""
    cdef long long mod
    cdef long long work[8][4]
    cdef long long outm[4][4]
    cdef int nwork, r, i, idx, best, a, besta, rp
    cdef long long x, pa, uin, q, piv, lell = ell
    if ell ** k >= SMALL_LIMIT:
        from . import _kernel_py
        return _kernel_py.lattice_key_mod(flat, ell, k)
    mod = ell ** k
    nwork = 4
    for idx in range(4):
        for i in range(4):
            work[idx][i] = flat[4 * i + idx] % mod
    for r in range(4):
        best = -1
        besta = k
        for idx in range(nwork):
            x = work[idx][r]
            if x == 0:
                continue
            a = 0
            while x % lell == 0:
                x = x // lell
                a += 1
            if a < besta:
                besta = a
                best = idx
        if best < 0:
            for i in range(4):
                outm[r][i] = 0
            continue
        a = besta
        pa = 1
        for i in range(a):
            pa *= lell
        uin = _inv_mod(work[best][r] // pa, mod)
        for i in range(4):
            outm[r][i] = (work[best][i] * uin) % mod
        # remove pivot column: swap in the last one
        nwork -= 1
        if best != nwork:
            for i in range(4):
                work[best][i] = work[nwork][i]
        for idx in range(nwork):
            if work[idx][r]:
                q = work[idx][r] // pa
                for i in range(4):
                    work[idx][i] = (work[idx][i] - q * outm[r][i]) % mod
        # Howell closure column
        x = mod // pa
        piv = 0
        for i in range(4):
            work[nwork][i] = (outm[r][i] * x) % mod
            if work[nwork][i]:
                piv = 1
        if piv:
            nwork += 1
    for r in range(4):
        for rp in range(r + 1, 4):
            piv = outm[rp][rp]
            if piv:
                q = outm[r][rp] // piv
                if q:
                    for i in range(4):
                        outm[r][i] = (outm[r][i] - q * outm[rp][i]) % mod
    return (outm[0][0], outm[0][1], outm[0][2], outm[0][3],
            outm[1][0], outm[1][1], outm[1][2], outm[1][3],
            outm[2][0], outm[2][1], outm[2][2], outm[2][3],
            outm[3][0], outm[3][1], outm[3][2], outm[3][3])
