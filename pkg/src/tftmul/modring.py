"""Prime-field arithmetic and the root-of-unity machinery behind the transforms.

Everything works on canonical residues (plain ints in [0, p)) under an
immutable RingConfig.  The config pins one root of maximal power-of-two
order; every smaller-order root is regenerated from it by repeated
squaring, so the chain w(k+1)^2 = w(k) holds by construction and no call
tabulates roots.  When a config carries an OpCounters, every ring
multiplication, addition and buffer allocation performed through this
package is tallied on it.
"""

from array import array


class RingConfigError(ValueError):
    """The (p, root, K) triple does not describe a usable prime field."""


class UnsupportedSizeError(ValueError):
    """Requested length or root level exceeds what the config supports."""


# Deterministic Miller-Rabin witness set for all 64-bit inputs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n):
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = ((d & -d).bit_length()) - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def ceil_lg(n):
    """Smallest k with 2^k >= n, for n >= 1."""
    if n < 1:
        raise ValueError("ceil_lg needs n >= 1")
    return (n - 1).bit_length()


class OpCounters:
    """Mutable operation tallies attached to an instrumented config."""

    __slots__ = ("mults", "adds", "allocs")

    def __init__(self):
        self.mults = 0
        self.adds = 0
        self.allocs = 0

    def reset(self):
        self.mults = 0
        self.adds = 0
        self.allocs = 0

    def __repr__(self):
        return f"OpCounters(mults={self.mults}, adds={self.adds}, allocs={self.allocs})"


class RingConfig:
    """Arithmetic context: modulus p, root of order 2^K, K, and 1/2 mod p.

    Treated as immutable after construction.  counters is None for
    uninstrumented use; attach an OpCounters to have every ring operation
    counted.
    """

    __slots__ = ("p", "K", "omegaK", "inv2", "counters")

    def __init__(self, p, omegaK, K, counters=None):
        if p < 3 or p % 2 == 0 or not is_probable_prime(p):
            raise RingConfigError(f"modulus {p} is not an odd prime")
        if p >= 1 << 62:
            raise RingConfigError("modulus must fit in 62 bits")
        if K < 0 or (p - 1) % (1 << K) != 0:
            raise RingConfigError(f"2^{K} does not divide p - 1 = {p - 1}")
        if not 0 < omegaK < p:
            raise RingConfigError(f"root {omegaK} is not a canonical residue mod {p}")
        if pow(omegaK, 1 << K, p) != 1:
            raise RingConfigError(f"{omegaK} is not a 2^{K}-th root of unity mod {p}")
        if K >= 1 and pow(omegaK, 1 << (K - 1), p) != p - 1:
            raise RingConfigError(f"{omegaK} has order smaller than 2^{K} mod {p}")
        if K == 0 and omegaK != 1:
            raise RingConfigError("a 2^0-th root of unity must be 1")
        self.p = p
        self.K = K
        self.omegaK = omegaK
        self.inv2 = (p + 1) >> 1
        self.counters = counters

    def __repr__(self):
        return f"RingConfig(p={self.p}, omegaK={self.omegaK}, K={self.K})"


def default_config(instrument=False):
    """NTT-friendly default: p = 119 * 2^23 + 1, generator 3."""
    p = 998244353
    return RingConfig(p, pow(3, 119, p), 23, OpCounters() if instrument else None)


def config_for_modulus(p, root=None, k=None, instrument=False):
    """Build a config for an arbitrary odd prime.

    With no root given, K defaults to the 2-adic valuation of p - 1 and the
    root is derived from the smallest quadratic nonresidue generator test.
    """
    if p < 3 or p % 2 == 0 or not is_probable_prime(p):
        raise RingConfigError(f"modulus {p} is not an odd prime")
    v2 = ((p - 1) & -(p - 1)).bit_length() - 1
    if k is None:
        k = v2
    if k > v2:
        raise RingConfigError(f"2^{k} does not divide p - 1 = {p - 1}")
    if root is None:
        g = 2
        while pow(g, (p - 1) >> 1, p) != p - 1:
            g += 1
        root = pow(g, (p - 1) >> k, p)
    return RingConfig(p, root, k, OpCounters() if instrument else None)


def ring_add(a, b, cfg):
    c = cfg.counters
    if c is not None:
        c.adds += 1
    s = a + b
    return s - cfg.p if s >= cfg.p else s


def ring_sub(a, b, cfg):
    c = cfg.counters
    if c is not None:
        c.adds += 1
    d = a - b
    return d + cfg.p if d < 0 else d


def ring_mul(a, b, cfg):
    c = cfg.counters
    if c is not None:
        c.mults += 1
    return a * b % cfg.p


def ring_pow(a, e, cfg):
    """Left-to-right square and multiply; ring_pow(a, 0) is 1 for any a."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if e == 0:
        return 1
    p = cfg.p
    r = a
    m = 0
    for i in range(e.bit_length() - 2, -1, -1):
        r = r * r % p
        m += 1
        if (e >> i) & 1:
            r = r * a % p
            m += 1
    c = cfg.counters
    if c is not None:
        c.mults += m
    return r


def root_of_level(k, cfg):
    """w(k), the canonical 2^k-th root: omegaK squared down K - k times."""
    if k < 0 or k > cfg.K:
        raise UnsupportedSizeError(f"level {k} outside [0, {cfg.K}]")
    p = cfg.p
    w = cfg.omegaK
    for _ in range(cfg.K - k):
        w = w * w % p
    c = cfg.counters
    if c is not None:
        c.mults += cfg.K - k
    return w


def revbin(s, k):
    """Reverse the low k bits of s; requires s < 2^k."""
    if s >> k:
        raise ValueError(f"{s} does not fit in {k} bits")
    r = 0
    for _ in range(k):
        r = (r << 1) | (s & 1)
        s >>= 1
    return r


def revbin_increment(c, k):
    """Step a k-bit reversed counter: rev_k(t) -> rev_k(t + 1).

    Carries propagate downward from the top bit.  The counter must not be
    all-ones (t = 2^k - 1 has no successor).
    """
    if k < 1:
        raise ValueError("counter width must be at least 1")
    bit = 1 << (k - 1)
    while c & bit:
        c ^= bit
        bit >>= 1
        if not bit:
            raise ValueError("reversed counter overflow")
    return c | bit


def omega(s, cfg):
    """The s-th transform evaluation point: w(bitlen(s)) ** revbin(s).

    The definition is size-independent: omega(s) does not depend on the
    transform length that uses it.  omega(0) is 1 with no work.
    """
    if s < 0 or s >= 1 << cfg.K:
        raise UnsupportedSizeError(f"index {s} outside [0, 2^{cfg.K})")
    if s == 0:
        return 1
    k = s.bit_length()
    return ring_pow(root_of_level(k, cfg), revbin(s, k), cfg)


class LevelRoots:
    """Per-call root cache: one working root at level k, derived lazily.

    A transform over n <= 2^k elements derives w(k) from the config root
    once (K - k squarings) and serves every smaller level from it, keeping
    per-lookup cost O(k) instead of O(K).  Holds a constant number of
    residues: the two lazy bases plus a four-slot reuse cache for the
    odd-tail root pairs.
    """

    __slots__ = ("cfg", "k", "base", "inv_base", "ch", "cwl", "cwh", "cage", "clock")

    def __init__(self, k, cfg):
        if k < 0 or k > cfg.K:
            raise UnsupportedSizeError(f"level {k} outside [0, {cfg.K}]")
        self.cfg = cfg
        self.k = k
        self.base = None
        self.inv_base = None
        self.ch = [-1, -1, -1, -1]
        self.cwl = [0, 0, 0, 0]
        self.cwh = [0, 0, 0, 0]
        self.cage = [0, 0, 0, 0]
        self.clock = 0

    def level_root(self, j, inverse=False):
        """w(j) (or its inverse) for j <= k, by squaring down from the base."""
        cfg = self.cfg
        p = cfg.p
        c = cfg.counters
        if inverse:
            w = self.inv_base
            if w is None:
                b = self.base
                if b is None:
                    b = cfg.omegaK
                    for _ in range(cfg.K - self.k):
                        b = b * b % p
                    if c is not None:
                        c.mults += cfg.K - self.k
                    self.base = b
                w = ring_pow(b, p - 2, cfg)
                self.inv_base = w
        else:
            w = self.base
            if w is None:
                w = cfg.omegaK
                for _ in range(cfg.K - self.k):
                    w = w * w % p
                if c is not None:
                    c.mults += cfg.K - self.k
                self.base = w
        if j > self.k:
            raise UnsupportedSizeError(f"level {j} above working level {self.k}")
        for _ in range(self.k - j):
            w = w * w % p
        if c is not None and j < self.k:
            c.mults += self.k - j
        return w

    def omega_rel(self, s):
        """Same value as omega(s, cfg) but derived from the working root."""
        if s == 0:
            return 1
        j = s.bit_length()
        return ring_pow(self.level_root(j), revbin(s, j), self.cfg)

    def tail_roots(self, half):
        """Root pair (omega(2*half), omega(half)) for an odd-tail block.

        Odd blocks of equal length need the identical pair, and only a few
        distinct lengths occur per traversal, so the last four pairs are
        kept in fixed slots.  A hit costs nothing; a miss costs one
        exponentiation plus one squaring, since doubling half appends a
        zero bit that the bit reversal discards: omega(2*half) is the
        level-(k+1) root raised to rev_k(half), and omega(half) is its
        square.
        """
        ch = self.ch
        self.clock += 1
        for i in range(4):
            if ch[i] == half:
                self.cage[i] = self.clock
                return self.cwl[i], self.cwh[i]
        cfg = self.cfg
        k = half.bit_length()
        wlast = ring_pow(self.level_root(k + 1), revbin(half, k), cfg)
        if half >= 2:
            whalf = wlast * wlast % cfg.p
            c = cfg.counters
            if c is not None:
                c.mults += 1
        else:
            whalf = 1
        age = self.cage
        j = 0
        for i in range(1, 4):
            if age[i] < age[j]:
                j = i
        ch[j] = half
        self.cwl[j] = wlast
        self.cwh[j] = whalf
        age[j] = self.clock
        return wlast, whalf


class RootPairIterator:
    """Yields (j, theta) pairs for the butterflies of one length-m block.

    j runs over 0 <= j < floor(m/2) in bit-reversed order; theta is
    omega(2j) in forward mode and its inverse in inverse mode.  State is a
    handful of scalars: each advance is one reversed-carry increment and
    one ring multiplication.  Counter positions at or beyond the bound are
    skipped.  The first pair is always (0, 1) and costs nothing.
    """

    __slots__ = ("cfg", "k", "bound", "j", "theta", "step", "emitted")

    def __init__(self, m, cfg, inverse=False, level=None):
        self.cfg = cfg
        self.bound = bound = m >> 1
        self.j = 0
        self.theta = 1
        self.emitted = 0
        if bound < 2:
            # zero or one pair; the step root is never consumed
            self.k = 1
            self.step = 1
            return
        # minimal level covering every 2j < m: theta steps through w(k)^t
        k = 1 + ceil_lg(bound)
        self.k = k
        if level is not None:
            self.step = level.level_root(k, inverse=inverse)
        else:
            w = root_of_level(k, cfg)
            self.step = ring_pow(w, cfg.p - 2, cfg) if inverse else w

    def __iter__(self):
        return self

    def __next__(self):
        if self.emitted >= self.bound:
            raise StopIteration
        out = (self.j, self.theta)
        self.emitted += 1
        if self.emitted < self.bound:
            cfg = self.cfg
            p = cfg.p
            c = cfg.counters
            width = self.k - 1
            j = self.j
            theta = self.theta
            step = self.step
            while True:
                j = revbin_increment(j, width)
                theta = theta * step % p
                if c is not None:
                    c.mults += 1
                if j < self.bound:
                    break
            self.j = j
            self.theta = theta
        return out


def root_pairs(m, cfg, inverse=False, level=None):
    """Iterator over the (j, theta) butterfly pairs of a length-m block."""
    return RootPairIterator(m, cfg, inverse=inverse, level=level)


def make_buffer(values, cfg):
    """Allocate a coefficient buffer (counted when instrumented).

    The canonical buffer is an unsigned 64-bit array; values must already
    be canonical residues.
    """
    c = cfg.counters
    if c is not None:
        c.allocs += 1
    buf = array("Q", values)
    p = cfg.p
    for v in buf:
        if v >= p:
            raise ValueError(f"value {v} is not canonical mod {p}")
    return buf


def zeros(n, cfg):
    """Allocate a zeroed coefficient buffer of length n (counted)."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    c = cfg.counters
    if c is not None:
        c.allocs += 1
    return array("Q", bytes(8 * n))
