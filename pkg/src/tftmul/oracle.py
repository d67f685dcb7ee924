"""Brute-force references and the space/operation measurement harness.

The references recompute everything from the config's top-level root
with builtin pow and explicit double loops, sharing no code with the
fast paths they check.  audited_call wraps any library call with fresh
counters and a frame watcher to report its operation and auxiliary-space
footprint.
"""

import sys
from typing import NamedTuple

from .modring import UnsupportedSizeError


class OpCountReport(NamedTuple):
    """What one audited call cost.

    mults/adds: ring multiplications and additions tallied by the config
    counters.  allocs: buffer allocations made through the library's
    factories (a compliant transform reports zero).  peak_aux_words: peak
    number of live local-variable slots in frames entered below the call;
    the entry frame counts every slot, deeper frames count their
    non-parameter slots, since arguments restate values the caller
    already holds.  Compiled kernels add no frames and report only the
    dispatch overhead.
    """

    mults: int
    adds: int
    allocs: int
    peak_aux_words: int


def _omega_independent(s, p, top, K):
    # evaluation point s: the level-(bitlen s) root raised to the
    # bit-reversed index, everything via builtin pow
    if s == 0:
        return 1
    k = s.bit_length()
    w = pow(top, 1 << (K - k), p)
    e = int(format(s, f"0{k}b")[::-1], 2)
    return pow(w, e, p)


def naive_dft(F, cfg):
    """Quadratic reference transform: evaluate F at the first n points."""
    n = len(F)
    if n == 0:
        raise ValueError("cannot transform an empty sequence")
    if n > 1 << cfg.K:
        raise UnsupportedSizeError(
            f"length {n} exceeds the 2^{cfg.K} roots the config supports"
        )
    p = cfg.p
    out = []
    for s in range(n):
        ws = _omega_independent(s, p, cfg.omegaK, cfg.K)
        acc = 0
        for i in range(n):
            acc = (acc + F[i] * pow(ws, i, p)) % p
        out.append(acc)
    return out


def schoolbook_mul(A, B, cfg):
    """Quadratic reference product with plain integer arithmetic."""
    if len(A) == 0 or len(B) == 0:
        raise ValueError("cannot multiply an empty polynomial")
    p = cfg.p
    out = [0] * (len(A) + len(B) - 1)
    for i in range(len(A)):
        a = A[i]
        for j in range(len(B)):
            out[i + j] = (out[i + j] + a * B[j]) % p
    return out


class _FrameWatcher:
    """Profile hook tracking the auxiliary-word footprint of a call.

    Words are local slots of live Python frames entered below the
    audited call, counted per OpCountReport's definition.  C-level calls
    add no Python frame and are ignored.  Recursion or any call depth
    that grows with the input shows up directly as a size-dependent
    peak.
    """

    __slots__ = ("depth", "words", "peak_words", "peak_depth")

    def __init__(self):
        self.depth = 0
        self.words = 0
        self.peak_words = 0
        self.peak_depth = 0

    def __call__(self, frame, event, arg):
        if event == "call":
            code = frame.f_code
            w = code.co_nlocals
            if self.depth > 0:
                w -= code.co_argcount + code.co_kwonlyargcount
            self.depth += 1
            self.words += w
            if self.words > self.peak_words:
                self.peak_words = self.words
            if self.depth > self.peak_depth:
                self.peak_depth = self.depth
        elif event == "return":
            code = frame.f_code
            w = code.co_nlocals
            if self.depth > 1:
                w -= code.co_argcount + code.co_kwonlyargcount
            self.depth -= 1
            self.words -= w


def audited_call(fn, *args, cfg):
    """Run fn(*args) under fresh counters and the frame watcher.

    The config must carry counters; they are reset first.  Returns the
    OpCountReport for exactly this call.
    """
    counters = cfg.counters
    if counters is None:
        raise ValueError("audited_call needs a config with counters attached")
    counters.reset()
    watcher = _FrameWatcher()
    old = sys.getprofile()
    sys.setprofile(watcher)
    try:
        fn(*args)
    finally:
        sys.setprofile(old)
    return OpCountReport(
        counters.mults, counters.adds, counters.allocs, watcher.peak_words
    )
