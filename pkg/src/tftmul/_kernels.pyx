# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the same walks as the pure modules, scalar for scalar.

Every multiplication and addition is tallied exactly where the pure code
tallies one, so the two backends report identical operation counts, not
just identical values.  All arithmetic runs on unsigned 64-bit residues
with 128-bit intermediate products; the modulus is limited to 62 bits
upstream, so no path here can overflow.
"""

ctypedef unsigned long long u64

cdef extern from *:
    ctypedef unsigned long long u128 "__uint128_t"


cdef inline u64 mulmod(u64 a, u64 b, u64 p) noexcept nogil:
    return <u64>((<u128>a * b) % p)


cdef inline int bitlen(u64 e) noexcept nogil:
    cdef int k = 0
    while e:
        e >>= 1
        k += 1
    return k


cdef inline int c_ceil_lg(long long n) noexcept nogil:
    return bitlen(<u64>(n - 1))


cdef inline u64 c_revbin(u64 s, int k) noexcept nogil:
    cdef u64 r = 0
    cdef int i
    for i in range(k):
        r = (r << 1) | (s & 1)
        s >>= 1
    return r


cdef inline u64 c_revinc(u64 c, int k) noexcept nogil:
    # reversed-counter increment: carries run from the top bit down
    cdef u64 bit = (<u64>1) << (k - 1)
    while c & bit:
        c ^= bit
        bit >>= 1
    return c | bit


# Per-transform state: ring constants, the lazy level-k working roots,
# the four-slot odd-tail root cache, and the running tallies.
cdef struct Level:
    u64 p
    u64 top
    u64 inv2
    int K
    int kstar
    bint has_base
    bint has_inv
    u64 base
    u64 inv_base
    long long ch[4]
    u64 cwl[4]
    u64 cwh[4]
    long long cage[4]
    long long clock
    long long mults
    long long adds


cdef void init_level(Level* st, u64 p, u64 top, int K, int kstar, u64 inv2) noexcept nogil:
    cdef int i
    st.p = p
    st.top = top
    st.inv2 = inv2
    st.K = K
    st.kstar = kstar
    st.has_base = 0
    st.has_inv = 0
    st.base = 0
    st.inv_base = 0
    for i in range(4):
        st.ch[i] = -1
        st.cwl[i] = 0
        st.cwh[i] = 0
        st.cage[i] = 0
    st.clock = 0
    st.mults = 0
    st.adds = 0


cdef u64 ring_pow_k(Level* st, u64 a, u64 e) noexcept nogil:
    # left-to-right square and multiply; e = 0 costs nothing
    if e == 0:
        return 1
    cdef u64 r = a
    cdef u64 p = st.p
    cdef int i
    for i in range(bitlen(e) - 2, -1, -1):
        r = mulmod(r, r, p)
        st.mults += 1
        if (e >> i) & 1:
            r = mulmod(r, a, p)
            st.mults += 1
    return r


cdef u64 ensure_base(Level* st) noexcept nogil:
    cdef u64 w
    cdef int i
    if not st.has_base:
        w = st.top
        for i in range(st.K - st.kstar):
            w = mulmod(w, w, st.p)
        st.mults += st.K - st.kstar
        st.base = w
        st.has_base = 1
    return st.base


cdef u64 level_root_k(Level* st, int j, bint inverse) noexcept nogil:
    cdef u64 w
    cdef int i
    if inverse:
        if not st.has_inv:
            st.inv_base = ring_pow_k(st, ensure_base(st), st.p - 2)
            st.has_inv = 1
        w = st.inv_base
    else:
        w = ensure_base(st)
    for i in range(st.kstar - j):
        w = mulmod(w, w, st.p)
    st.mults += st.kstar - j
    return w


cdef void tail_roots_k(Level* st, long long half, u64* wlast, u64* whalf) noexcept nogil:
    cdef int i, j, k
    cdef u64 wl, wh
    st.clock += 1
    for i in range(4):
        if st.ch[i] == half:
            st.cage[i] = st.clock
            wlast[0] = st.cwl[i]
            whalf[0] = st.cwh[i]
            return
    k = bitlen(<u64>half)
    wl = ring_pow_k(st, level_root_k(st, k + 1, 0), c_revbin(<u64>half, k))
    if half >= 2:
        wh = mulmod(wl, wl, st.p)
        st.mults += 1
    else:
        wh = 1
    j = 0
    for i in range(1, 4):
        if st.cage[i] < st.cage[j]:
            j = i
    st.ch[j] = half
    st.cwl[j] = wl
    st.cwh[j] = wh
    st.cage[j] = st.clock
    wlast[0] = wl
    whalf[0] = wh


cdef u64 g_omega(Level* st, u64 s) noexcept nogil:
    # omega from the top root directly, outside any working-level cache
    cdef u64 w
    cdef int i, k
    if s == 0:
        return 1
    k = bitlen(s)
    w = st.top
    for i in range(st.K - k):
        w = mulmod(w, w, st.p)
    st.mults += st.K - k
    return ring_pow_k(st, w, c_revbin(s, k))


cdef void bf_forward(Level* st, u64* X, long long off, long long q, int r, long long m) noexcept nogil:
    cdef long long bound = m >> 1
    if bound == 0:
        return
    cdef u64 p = st.p
    cdef long long stride = (<long long>1) << r
    cdef long long base_i = off + q
    cdef long long step2 = stride << 1
    cdef int k = 1
    cdef u64 step = 1
    cdef u64 theta = 1
    cdef long long j = 0
    cdef long long emitted = 0
    cdef long long lo, hi
    cdef u64 a, b, t
    if bound >= 2:
        k = 1 + c_ceil_lg(bound)
        step = level_root_k(st, k, 0)
    while emitted < bound:
        lo = base_i + j * step2
        hi = lo + stride
        a = X[lo]
        b = X[hi]
        if j:
            b = mulmod(b, theta, p)
            st.mults += 1
        t = a + p - b
        if t >= p:
            t -= p
        a = a + b
        if a >= p:
            a -= p
        X[lo] = a
        X[hi] = t
        emitted += 1
        if emitted < bound:
            while True:
                j = <long long>c_revinc(<u64>j, k - 1)
                theta = mulmod(theta, step, p)
                st.mults += 1
                if j < bound:
                    break
    st.adds += 2 * bound


cdef void bf_inverse(Level* st, u64* X, long long off, long long q, int r, long long m) noexcept nogil:
    cdef long long bound = m >> 1
    if bound == 0:
        return
    cdef u64 p = st.p
    cdef u64 inv2 = st.inv2
    cdef long long stride = (<long long>1) << r
    cdef long long base_i = off + q
    cdef long long step2 = stride << 1
    cdef int k = 1
    cdef u64 step = 1
    cdef u64 theta = 1
    cdef long long j = 0
    cdef long long emitted = 0
    cdef long long lo, hi
    cdef u64 a, b, s, d
    if bound >= 2:
        k = 1 + c_ceil_lg(bound)
        step = level_root_k(st, k, 1)
    while emitted < bound:
        lo = base_i + j * step2
        hi = lo + stride
        a = X[lo]
        b = X[hi]
        s = a + b
        if s >= p:
            s -= p
        d = a + p - b
        if d >= p:
            d -= p
        s = mulmod(s, inv2, p)
        d = mulmod(d, inv2, p)
        st.mults += 2
        if j:
            d = mulmod(d, theta, p)
            st.mults += 1
        X[lo] = s
        X[hi] = d
        emitted += 1
        if emitted < bound:
            while True:
                j = <long long>c_revinc(<u64>j, k - 1)
                theta = mulmod(theta, step, p)
                st.mults += 1
                if j < bound:
                    break
    st.adds += 2 * bound


cdef void odd_tail(Level* st, u64* X, long long off, long long q, int r, long long m, int sign) noexcept nogil:
    cdef u64 p = st.p
    cdef long long stride = (<long long>1) << r
    cdef long long step2 = stride << 1
    cdef long long half = (m - 1) >> 1
    cdef u64 wlast, whalf, v, t, u
    cdef long long i, idx, last
    tail_roots_k(st, half, &wlast, &whalf)
    idx = off + q + (m - 2) * stride
    v = X[idx]
    for i in range(half - 1):
        idx -= step2
        v = <u64>(((<u128>v * whalf) + X[idx]) % p)
    t = mulmod(v, wlast, p)
    last = off + q + (m - 1) * stride
    if sign > 0:
        u = X[last] + t
    else:
        u = X[last] + p - t
    if u >= p:
        u -= p
    X[last] = u
    st.mults += half
    st.adds += half


cdef inline long long c_node_len(long long n, long long q, int r) noexcept nogil:
    return (n - q + ((<long long>1) << r) - 1) >> r


cdef void tft_core(Level* st, u64* X, long long off, long long n) noexcept nogil:
    cdef long long q = 0
    cdef int r = 0
    cdef long long prevq = -1
    cdef int prevr = -1
    cdef long long m, half_stride
    while c_node_len(n, q, r) > 1:
        r += 1
    while True:
        m = c_node_len(n, q, r)
        if m == 1 or (prevr == r + 1 and prevq == q + ((<long long>1) << r)):
            if m > 1:
                bf_forward(st, X, off, q, r, m)
            if r == 0:
                return
            prevq = q
            prevr = r
            half_stride = (<long long>1) << (r - 1)
            if q >= half_stride:
                q -= half_stride
            r -= 1
        else:
            # back from the even child: fix the odd tail, then descend right
            if m & 1:
                odd_tail(st, X, off, q, r, m, 1)
            prevq = q
            prevr = r
            q += (<long long>1) << r
            r += 1
            while c_node_len(n, q, r) > 1:
                r += 1


cdef void itft_core(Level* st, u64* X, long long off, long long n) noexcept nogil:
    cdef long long hq = 0
    cdef int hr = 0
    cdef long long q = 0
    cdef int r = 0
    cdef long long m, half_stride
    while c_node_len(n, hq, hr) > 1:
        hr += 1
    while q != hq or r != hr:
        m = c_node_len(n, q, r)
        if m == 1:
            # climb out of a finished odd subtree to its split point
            while q < ((<long long>1) << (r - 1)):
                r -= 1
            half_stride = (<long long>1) << (r - 1)
            if q >= half_stride:
                q -= half_stride
            r -= 1
            m = c_node_len(n, q, r)
            if m & 1:
                odd_tail(st, X, off, q, r, m, -1)
            r += 1
        else:
            bf_inverse(st, X, off, q, r, m)
            q += (<long long>1) << r
            r += 1


cdef void fold_twist_k(Level* st, const u64* src, long long ls, u64* X,
                       long long base, long long L, long long q) noexcept nogil:
    cdef u64 p = st.p
    cdef long long idx = base
    cdef long long topi = base + L
    cdef long long i
    cdef u64 w, pw, v, t
    if q:
        w = g_omega(st, <u64>q)
        pw = 1
        for i in range(ls):
            v = src[i]
            if i:
                pw = mulmod(pw, w, p)
                v = mulmod(v, pw, p)
                st.mults += 2
            t = X[idx] + v
            if t >= p:
                t -= p
            X[idx] = t
            idx += 1
            if idx == topi:
                idx = base
    else:
        for i in range(ls):
            t = X[idx] + src[i]
            if t >= p:
                t -= p
            X[idx] = t
            idx += 1
            if idx == topi:
                idx = base
    st.adds += ls


cdef u64 horner_k(Level* st, const u64* poly, long long nc, u64 point) noexcept nogil:
    cdef u64 p = st.p
    cdef u64 acc = poly[nc - 1]
    cdef long long i
    for i in range(nc - 2, -1, -1):
        acc = mulmod(acc, point, p)
        acc += poly[i]
        if acc >= p:
            acc -= p
    st.mults += nc - 1
    st.adds += nc - 1
    return acc


def tft(u64[::1] x, long long off, long long n, u64 p, u64 top, int K):
    """Forward transform on x[off : off + n]; returns (mults, adds)."""
    cdef Level st
    init_level(&st, p, top, K, c_ceil_lg(n), 0)
    with nogil:
        tft_core(&st, &x[0], off, n)
    return st.mults, st.adds


def itft(u64[::1] x, long long off, long long n, u64 p, u64 top, int K, u64 inv2):
    """Inverse transform on x[off : off + n]; returns (mults, adds)."""
    cdef Level st
    init_level(&st, p, top, K, c_ceil_lg(n), inv2)
    with nogil:
        itft_core(&st, &x[0], off, n)
    return st.mults, st.adds


def multiply(const u64[::1] a, const u64[::1] b, u64[::1] x, u64 p, u64 top, int K, u64 inv2):
    """Product of a and b written into x (len(a) + len(b) - 1 slots).

    Mirrors the pure block schedule: each power-of-two block gets the
    twisted folds of both inputs, a fresh in-place transform each, and a
    pointwise pass; the final slot comes from two direct evaluations, and
    one inverse transform over the whole buffer finishes the product.
    Returns (mults, adds).
    """
    cdef long long la = a.shape[0]
    cdef long long lb = b.shape[0]
    cdef long long r = x.shape[0]
    cdef Level stg, stt
    cdef long long tot_m = 0
    cdef long long tot_a = 0
    cdef long long q = 0
    cdef long long L, i
    cdef int ell
    cdef u64 w
    init_level(&stg, p, top, K, K, inv2)
    with nogil:
        while q < r - 1:
            ell = bitlen(<u64>(r - q)) - 2
            L = (<long long>1) << ell
            for i in range(q, q + 2 * L):
                x[i] = 0
            fold_twist_k(&stg, &a[0], la, &x[0], q, L, q)
            init_level(&stt, p, top, K, ell, inv2)
            tft_core(&stt, &x[0], q, L)
            tot_m += stt.mults
            tot_a += stt.adds
            fold_twist_k(&stg, &b[0], lb, &x[0], q + L, L, q)
            init_level(&stt, p, top, K, ell, inv2)
            tft_core(&stt, &x[0], q + L, L)
            tot_m += stt.mults
            tot_a += stt.adds
            for i in range(q, q + L):
                x[i] = mulmod(x[i], x[i + L], p)
            stg.mults += L
            q += L
        w = g_omega(&stg, <u64>(r - 1))
        x[r - 1] = mulmod(horner_k(&stg, &a[0], la, w), horner_k(&stg, &b[0], lb, w), p)
        stg.mults += 1
        init_level(&stt, p, top, K, c_ceil_lg(r), inv2)
        itft_core(&stt, &x[0], 0, r)
    tot_m += stg.mults + stt.mults
    tot_a += stg.adds + stt.adds
    return tot_m, tot_a
