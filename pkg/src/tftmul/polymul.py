"""Polynomial multiplication inside the output buffer plus O(1) scalars.

The product range [0, r-1) is covered by a greedy schedule of
power-of-two blocks.  Each block is filled with twisted folds of the two
inputs, transformed in place, and multiplied pointwise, which yields the
final transform values of the product for those slots; the last slot
comes from two direct evaluations.  A single inverse transform over the
whole buffer then recovers the product coefficients.  The inputs are
never written.
"""

from typing import NamedTuple

from . import backend
from .modring import UnsupportedSizeError, omega, ring_mul
from .transforms import _credit, _itft_py, _tft_py


class BlockStep(NamedTuple):
    q: int
    ell: int
    L: int


def block_schedule(r):
    """Greedy power-of-two cover of [0, r-1).

    Every step takes the largest L = 2^ell with q + 2L <= r, which forces
    2L <= r - q < 4L and keeps L dividing q; at most 2 lg r steps occur.
    """
    q = 0
    while q < r - 1:
        ell = (r - q).bit_length() - 2
        L = 1 << ell
        yield BlockStep(q, ell, L)
        q += L


def horner_eval(poly, point, cfg):
    """Evaluate a nonempty coefficient sequence at one ring point."""
    if len(poly) == 0:
        raise ValueError("cannot evaluate an empty polynomial")
    p = cfg.p
    acc = poly[-1]
    n = len(poly) - 1
    for i in range(n - 1, -1, -1):
        acc = acc * point % p
        acc += poly[i]
        if acc >= p:
            acc -= p
    _credit(cfg, n, n)
    return acc


def fold_twist(src, X, base, L, q, cfg):
    """Accumulate the twisted fold of src into the block X[base : base+L].

    Block slot i gains the sum of src[i + j*L] * omega(q)^(i + j*L) over
    j: the coefficients of src(omega(q) x) reduced mod x^L - 1.  The
    caller zeroes the block first.  L must divide q so that the block's
    power-of-two transform lands on the global evaluation points q..q+L-1.
    """
    p = cfg.p
    mults = 0
    idx = base
    top = base + L
    if q:
        w = omega(q, cfg)
        pw = 1
        for i in range(len(src)):
            v = src[i]
            if i:
                pw = pw * w % p
                v = v * pw % p
                mults += 2
            t = X[idx] + v
            X[idx] = t - p if t >= p else t
            idx += 1
            if idx == top:
                idx = base
    else:
        for i in range(len(src)):
            t = X[idx] + src[i]
            X[idx] = t - p if t >= p else t
            idx += 1
            if idx == top:
                idx = base
    _credit(cfg, mults, len(src))


def _multiply_py(A, B, X, cfg):
    p = cfg.p
    r = len(X)
    for q, ell, L in block_schedule(r):
        for i in range(q, q + 2 * L):
            X[i] = 0
        fold_twist(A, X, q, L, q, cfg)
        _tft_py(X, q, L, cfg)
        fold_twist(B, X, q + L, L, q, cfg)
        _tft_py(X, q + L, L, cfg)
        mults = 0
        for i in range(q, q + L):
            X[i] = X[i] * X[i + L] % p
            mults += 1
        _credit(cfg, mults, 0)
    w = omega(r - 1, cfg)
    X[r - 1] = ring_mul(horner_eval(A, w, cfg), horner_eval(B, w, cfg), cfg)
    _itft_py(X, 0, r, cfg)


def multiply(A, B, X, cfg):
    """Multiply coefficient sequences A and B into the buffer X.

    X must have length len(A) + len(B) - 1 and is overwritten completely;
    A and B are read-only.  All transforms run inside X, so auxiliary
    space stays a constant number of scalars.
    """
    la = len(A)
    lb = len(B)
    if la == 0 or lb == 0:
        raise ValueError("cannot multiply an empty polynomial")
    r = la + lb - 1
    if len(X) != r:
        raise ValueError(f"output buffer has length {len(X)}, need {r}")
    if r > 1 << cfg.K:
        raise UnsupportedSizeError(
            f"product length {r} exceeds the 2^{cfg.K} roots the config supports"
        )
    if X is A or X is B:
        raise ValueError("output buffer must be distinct from the inputs")
    mvx = backend.kernel_view(X)
    if mvx is not None:
        mva = backend.kernel_view(A, writable=False)
        mvb = backend.kernel_view(B, writable=False)
        if mva is not None and mvb is not None:
            m, a = backend.kernels().multiply(
                mva, mvb, mvx, cfg.p, cfg.omegaK, cfg.K, cfg.inv2
            )
            _credit(cfg, m, a)
            return
    _multiply_py(A, B, X, cfg)
