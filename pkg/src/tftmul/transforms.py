"""In-place forward and inverse transforms for arbitrary lengths.

The forward map sends n coefficients to the first n evaluations at the
size-independent point sequence omega(0), omega(1), ...; the inverse map
undoes it exactly.  Both walk the implicit recursion tree iteratively
with a constant number of live scalars: no recursion, no temporaries
proportional to n, no root tables.  Traversal state is the (node, prev)
pair plus one lazy LevelRoots cache.

Odd-length blocks need one extra step beyond the butterflies: the lone
unpaired element receives (forward) or sheds (inverse) the evaluation of
the odd-half polynomial that a full-size block would have produced.

The compiled kernels, when built, take over for 64-bit buffers and
produce bit-identical values and operation counts.
"""

from . import backend
from .modring import (
    LevelRoots,
    RootPairIterator,
    UnsupportedSizeError,
    ceil_lg,
)
from .tree import ROOT, even, first_leaf, node_len, odd, parent, rising_parent


def _check_size(n, cfg):
    if n == 0:
        raise ValueError("cannot transform an empty buffer")
    if n > 1 << cfg.K:
        raise UnsupportedSizeError(
            f"length {n} exceeds the 2^{cfg.K} roots the config supports"
        )


def _credit(cfg, mults, adds):
    c = cfg.counters
    if c is not None:
        c.mults += mults
        c.adds += adds


def butterfly_block_forward(X, S, n, cfg, level=None, off=0):
    """Forward butterflies across the paired elements of block S.

    Pair (S_2j, S_2j+1) becomes (a + theta*b, a - theta*b) with theta from
    the block's root-pair sequence.  An odd-length block leaves its last
    element alone.
    """
    q, r = S
    m = node_len(S, n)
    bound = m >> 1
    if not bound:
        return
    p = cfg.p
    stride = 1 << r
    base = off + q
    step2 = stride << 1
    mults = 0
    for j, theta in RootPairIterator(m, cfg, level=level):
        lo = base + j * step2
        hi = lo + stride
        a = X[lo]
        b = X[hi]
        if j:
            b = b * theta % p
            mults += 1
        t = a - b
        a = a + b
        X[lo] = a - p if a >= p else a
        X[hi] = t + p if t < 0 else t
    _credit(cfg, mults, 2 * bound)


def butterfly_block_inverse(X, S, n, cfg, level=None, off=0):
    """Undo butterfly_block_forward: halved sums and theta-inverse twists."""
    q, r = S
    m = node_len(S, n)
    bound = m >> 1
    if not bound:
        return
    p = cfg.p
    inv2 = cfg.inv2
    stride = 1 << r
    base = off + q
    step2 = stride << 1
    mults = 0
    for j, theta in RootPairIterator(m, cfg, inverse=True, level=level):
        lo = base + j * step2
        hi = lo + stride
        a = X[lo]
        b = X[hi]
        s = a + b
        if s >= p:
            s -= p
        d = a - b
        if d < 0:
            d += p
        s = s * inv2 % p
        d = d * inv2 % p
        mults += 2
        if j:
            d = d * theta % p
            mults += 1
        X[lo] = s
        X[hi] = d
    _credit(cfg, mults, 2 * bound)


def odd_tail_correction_forward(X, S, n, cfg, level=None, off=0):
    """Fold the stranded odd-half evaluation into the last slot of S."""
    _odd_tail(X, S, n, cfg, level, off, 1)


def odd_tail_correction_inverse(X, S, n, cfg, level=None, off=0):
    """Remove exactly what the forward correction folded in."""
    _odd_tail(X, S, n, cfg, level, off, -1)


def _odd_tail(X, S, n, cfg, level, off, sign):
    # v = H(omega(h)) where H is the odd-half polynomial of the block and
    # h = (m-1)/2; the last slot gains (forward) or loses (inverse)
    # v * omega(m-1).  Horner descending: one multiplication per term,
    # constant live scalars, and the root pair comes from the fixed-slot
    # cache so same-length blocks pay for the derivation once.
    q, r = S
    m = node_len(S, n)
    if m < 3 or not m & 1:
        raise ValueError(f"odd-tail correction needs an odd block length >= 3, got {m}")
    if level is None:
        level = LevelRoots(cfg.K, cfg)
    p = cfg.p
    stride = 1 << r
    step2 = stride << 1
    half = (m - 1) >> 1
    wlast, whalf = level.tail_roots(half)
    idx = off + q + (m - 2) * stride
    v = X[idx]
    for _ in range(half - 1):
        idx -= step2
        v = (v * whalf + X[idx]) % p
    t = v * wlast % p
    last = off + q + (m - 1) * stride
    u = X[last] + t if sign > 0 else X[last] - t
    if u >= p:
        u -= p
    elif u < 0:
        u += p
    X[last] = u
    _credit(cfg, half, half)


def _tft_py(X, off, n, cfg, trace=None):
    # Iterative tree walk: visit a leaf, run the butterflies of every
    # ancestor reached from its odd child, descend into the next pending
    # odd subtree.  prev disambiguates which child we came back from.
    level = LevelRoots(ceil_lg(n), cfg)
    S = first_leaf(ROOT, n)
    prev = None
    while True:
        m = node_len(S, n)
        if m == 1 or prev == odd(S):
            if trace is not None:
                trace.append(("L" if m == 1 else "B", S))
            if m > 1:
                butterfly_block_forward(X, S, n, cfg, level=level, off=off)
            if S.r == 0:
                return
            prev = S
            S = parent(S)
        else:
            # back from the even child: fix the odd tail, then descend right
            if trace is not None:
                trace.append(("C", S))
            if m & 1:
                odd_tail_correction_forward(X, S, n, cfg, level=level, off=off)
            prev = S
            S = first_leaf(odd(S), n)


def _itft_py(X, off, n, cfg, trace=None):
    # Exact mirror of the forward walk, run backwards: split with inverse
    # butterflies on the way down the odd spine, undo odd-tail corrections
    # when climbing out of a finished odd subtree.
    level = LevelRoots(ceil_lg(n), cfg)
    home = first_leaf(ROOT, n)
    S = ROOT
    while S != home:
        if node_len(S, n) == 1:
            if trace is not None:
                trace.append(("L", S))
            S = parent(rising_parent(S, n))
            if trace is not None:
                trace.append(("C", S))
            if node_len(S, n) & 1:
                odd_tail_correction_inverse(X, S, n, cfg, level=level, off=off)
            S = even(S)
        else:
            if trace is not None:
                trace.append(("B", S))
            butterfly_block_inverse(X, S, n, cfg, level=level, off=off)
            S = odd(S)
    if trace is not None:
        trace.append(("L", home))


def tft(buf, cfg, trace=None):
    """In-place forward transform of an arbitrary-length buffer.

    With a trace list given, every node visit is appended as (kind, node)
    and the pure path is used; kinds are "L" (leaf), "B" (butterfly pass)
    and "C" (back from the even child, odd tail fixed if the length is
    odd).
    """
    n = len(buf)
    _check_size(n, cfg)
    if trace is None:
        mv = backend.kernel_view(buf)
        if mv is not None:
            m, a = backend.kernels().tft(mv, 0, n, cfg.p, cfg.omegaK, cfg.K)
            _credit(cfg, m, a)
            return
    _tft_py(buf, 0, n, cfg, trace)


def itft(buf, cfg, trace=None):
    """In-place inverse transform; exact inverse of tft on the same config."""
    n = len(buf)
    _check_size(n, cfg)
    if trace is None:
        mv = backend.kernel_view(buf)
        if mv is not None:
            m, a = backend.kernels().itft(mv, 0, n, cfg.p, cfg.omegaK, cfg.K, cfg.inv2)
            _credit(cfg, m, a)
            return
    _itft_py(buf, 0, n, cfg, trace)


def fft_pow2(buf, cfg):
    """Forward transform restricted to power-of-two lengths.

    Power-of-two lengths never reach the ragged branches of the general
    walk, so this shares its code and its exact operation count with tft;
    the only difference is the up-front shape check.
    """
    n = len(buf)
    _check_size(n, cfg)
    if n & (n - 1):
        raise ValueError(f"length {n} is not a power of two")
    mv = backend.kernel_view(buf)
    if mv is not None:
        m, a = backend.kernels().tft(mv, 0, n, cfg.p, cfg.omegaK, cfg.K)
        _credit(cfg, m, a)
        return
    _tft_py(buf, 0, n, cfg)
