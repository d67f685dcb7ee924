"""Block schedule, folding, and the in-buffer product."""

import random

import pytest

from tftmul.modring import (
    OpCounters,
    RingConfig,
    UnsupportedSizeError,
    default_config,
    make_buffer,
    omega,
    ring_mul,
    zeros,
)
from tftmul.oracle import naive_dft, schoolbook_mul
from tftmul.polymul import block_schedule, fold_twist, horner_eval, multiply
from tftmul.transforms import tft

rng = random.Random(0xB10C)


def small_cfg():
    return RingConfig(17, 3, 4)


def test_worked_examples():
    cfg = small_cfg()
    out = zeros(1, cfg)
    multiply(make_buffer([1], cfg), make_buffer([1], cfg), out, cfg)
    assert list(out) == [1]
    out = zeros(3, cfg)
    multiply(make_buffer([1, 1], cfg), make_buffer([1, 1], cfg), out, cfg)
    assert list(out) == [1, 2, 1]
    out = zeros(4, cfg)
    multiply(make_buffer([2, 3], cfg), make_buffer([4, 5, 6], cfg), out, cfg)
    assert list(out) == [8, 5, 10, 1]


def test_matches_schoolbook():
    cfg = default_config()
    for _ in range(150):
        m = rng.randrange(1, 30)
        n = rng.randrange(1, 30)
        a = [rng.randrange(cfg.p) for _ in range(m)]
        b = [rng.randrange(cfg.p) for _ in range(n)]
        out = zeros(m + n - 1, cfg)
        multiply(make_buffer(a, cfg), make_buffer(b, cfg), out, cfg)
        assert list(out) == schoolbook_mul(a, b, cfg), (m, n)


def test_inputs_left_untouched():
    cfg = default_config()
    a = make_buffer([rng.randrange(cfg.p) for _ in range(23)], cfg)
    b = make_buffer([rng.randrange(cfg.p) for _ in range(41)], cfg)
    keep_a = bytes(a.tobytes())
    keep_b = bytes(b.tobytes())
    out = zeros(63, cfg)
    multiply(a, b, out, cfg)
    assert a.tobytes() == keep_a
    assert b.tobytes() == keep_b


def test_argument_validation():
    cfg = small_cfg()
    a = make_buffer([1, 2], cfg)
    b = make_buffer([3], cfg)
    with pytest.raises(ValueError):
        multiply(make_buffer([], cfg), b, zeros(0, cfg), cfg)
    with pytest.raises(ValueError):
        multiply(a, b, zeros(5, cfg), cfg)  # wrong output length
    with pytest.raises(ValueError):
        multiply(a, b, a, cfg)  # aliased output
    big = make_buffer([1] * 10, cfg)
    with pytest.raises(UnsupportedSizeError):
        multiply(big, big, zeros(19, cfg), cfg)  # product longer than 2^4


def test_block_schedule_covers_prefix():
    for r in list(range(1, 200)) + [513, 1000, 4096]:
        q = 0
        steps = 0
        for step in block_schedule(r):
            assert step.q == q
            assert step.L == 1 << step.ell
            assert 2 * step.L <= r - step.q < 4 * step.L
            assert step.q % step.L == 0
            q += step.L
            steps += 1
        assert q == r - 1 if r > 1 else steps == 0
        if r > 1:
            assert steps <= 2 * r.bit_length()


def test_fold_twist_plain_fold():
    # q = 0: slot i accumulates src[i mod-L strided]
    cfg = small_cfg()
    src = make_buffer([1, 2, 3, 4, 5, 6, 7], cfg)
    X = zeros(8, cfg)
    fold_twist(src, X, 2, 4, 0, cfg)
    assert list(X) == [0, 0, 1 + 5, 2 + 6, 3 + 7, 4, 0, 0]


def test_fold_twist_twisted_fold():
    # q > 0: term i carries omega(q)^i before folding
    cfg = small_cfg()
    vals = [3, 1, 4, 1, 5]
    src = make_buffer(vals, cfg)
    L, q = 2, 2
    X = zeros(4, cfg)
    fold_twist(src, X, 0, L, q, cfg)
    w = omega(q, cfg)
    want = [0, 0]
    for i, v in enumerate(vals):
        want[i % L] = (want[i % L] + v * pow(w, i, 17)) % 17
    assert list(X)[:2] == want


def test_fold_twist_then_transform_hits_global_points():
    # the twisted fold of A transformed over length L equals the global
    # evaluations hat A at indices q .. q+L-1; this is the property that
    # lets every block land directly in its final slots
    cfg = default_config()
    for L, q, la in ((4, 4, 11), (8, 8, 20), (2, 6, 9), (4, 12, 16)):
        a = [rng.randrange(cfg.p) for _ in range(la)]
        X = zeros(q + L, cfg)
        fold_twist(make_buffer(a, cfg), X, q, L, q, cfg)
        block = make_buffer(list(X)[q : q + L], cfg)
        tft(block, cfg)
        want = [_eval_at(a, s, cfg) for s in range(q, q + L)]
        assert list(block) == want


def _eval_at(coeffs, s, cfg):
    x = omega(s, cfg)
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % cfg.p
    return acc


def test_pre_inverse_state_matches_oracle():
    # replaying the schedule by hand: after all blocks plus the last-slot
    # evaluation, the buffer holds the transform of the product
    cfg = default_config()
    for la, lb in ((4, 5), (7, 7), (3, 12), (20, 13)):
        a = [rng.randrange(cfg.p) for _ in range(la)]
        b = [rng.randrange(cfg.p) for _ in range(lb)]
        r = la + lb - 1
        X = zeros(r, cfg)
        for q, ell, L in block_schedule(r):
            for i in range(q, q + 2 * L):
                X[i] = 0
            fold_twist(make_buffer(a, cfg), X, q, L, q, cfg)
            blk = make_buffer(list(X)[q : q + L], cfg)
            tft(blk, cfg)
            X[q : q + L] = blk
            fold_twist(make_buffer(b, cfg), X, q + L, L, q, cfg)
            blk = make_buffer(list(X)[q + L : q + 2 * L], cfg)
            tft(blk, cfg)
            X[q + L : q + 2 * L] = blk
            for i in range(q, q + L):
                X[i] = X[i] * X[i + L] % cfg.p
        w = omega(r - 1, cfg)
        X[r - 1] = ring_mul(horner_eval(a, w, cfg), horner_eval(b, w, cfg), cfg)
        product = schoolbook_mul(a, b, cfg)
        assert list(X) == naive_dft(product, cfg)[:r]


def test_horner_eval():
    cfg = small_cfg()
    assert horner_eval([5], 3, cfg) == 5
    assert horner_eval([1, 2, 3], 2, cfg) == (1 + 2 * 2 + 3 * 4) % 17
    with pytest.raises(ValueError):
        horner_eval([], 3, cfg)


def test_list_inputs_take_the_pure_path():
    # plain lists cannot be viewed as 64-bit buffers; values must agree
    cfg = default_config()
    a = [rng.randrange(cfg.p) for _ in range(9)]
    b = [rng.randrange(cfg.p) for _ in range(14)]
    out_list = [0] * 22
    multiply(a, b, out_list, cfg)
    out_arr = zeros(22, cfg)
    multiply(make_buffer(a, cfg), make_buffer(b, cfg), out_arr, cfg)
    assert out_list == list(out_arr)
