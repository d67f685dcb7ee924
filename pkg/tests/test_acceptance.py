"""End-to-end acceptance gate.

Each test covers one delivery criterion at its stated size and prints a
single summary line on success; a failed assert is the fail line.  The
checks are exact, no tolerances: everything here is integer arithmetic.
"""

import math
import random
from collections import Counter

from tftmul.modring import RingConfig, default_config, make_buffer, zeros
from tftmul.oracle import audited_call, naive_dft, schoolbook_mul
from tftmul.polymul import block_schedule, multiply
from tftmul.transforms import fft_pow2, itft, tft
from tftmul.tree import is_leaf

rng = random.Random(0xACCE97)

P = 998244353


def test_criterion_1_round_trip_identity():
    cfg = default_config()
    for n in range(1, 1025):
        for _ in range(20):
            data = [rng.randrange(P) for _ in range(n)]
            buf = make_buffer(data, cfg)
            tft(buf, cfg)
            itft(buf, cfg)
            assert list(buf) == data, f"round trip broke at n={n}"
    print("criterion 1: PASS round trip exact, n=1..1024, 20 random inputs each")


def test_criterion_2_forward_oracle():
    cfg = default_config()
    for n in range(1, 257):
        data = [rng.randrange(P) for _ in range(n)]
        buf = make_buffer(data, cfg)
        tft(buf, cfg)
        assert list(buf) == naive_dft(data, cfg), f"oracle mismatch at n={n}"
    print("criterion 2: PASS transform equals quadratic oracle, n=1..256")


def test_criterion_3_fft_tft_agreement():
    cfg = default_config()
    for k in range(11):
        n = 1 << k
        data = [rng.randrange(P) for _ in range(n)]
        a = make_buffer(data, cfg)
        b = make_buffer(data, cfg)
        fft_pow2(a, cfg)
        tft(b, cfg)
        assert list(a) == list(b), f"fft_pow2 disagrees at n={n}"
    print("criterion 3: PASS fft_pow2 matches tft at every power of two <= 1024")


def test_criterion_4_multiplication_oracle():
    cfg = default_config()
    for m in range(1, 65):
        for n in range(1, 65):
            a = [rng.randrange(P) for _ in range(m)]
            b = [rng.randrange(P) for _ in range(n)]
            out = zeros(m + n - 1, cfg)
            multiply(make_buffer(a, cfg), make_buffer(b, cfg), out, cfg)
            assert list(out) == schoolbook_mul(a, b, cfg), (m, n)
    small = RingConfig(17, 3, 4)
    out = zeros(1, small)
    multiply(make_buffer([1], small), make_buffer([1], small), out, small)
    assert list(out) == [1]
    out = zeros(3, small)
    multiply(make_buffer([1, 1], small), make_buffer([1, 1], small), out, small)
    assert list(out) == [1, 2, 1]
    out = zeros(4, small)
    multiply(make_buffer([2, 3], small), make_buffer([4, 5, 6], small), out, small)
    assert list(out) == [8, 5, 10, 1]
    print("criterion 4: PASS product equals schoolbook, all 4096 shapes + worked examples")


def _audit_transforms(cfg, n):
    data = [rng.randrange(P) for _ in range(n)]
    fwd = audited_call(tft, list(data), cfg, cfg=cfg)
    inv = audited_call(itft, list(data), cfg, cfg=cfg)
    return fwd, inv


def _audit_multiply(cfg, r):
    la = r // 2
    a = [rng.randrange(P) for _ in range(la)]
    b = [rng.randrange(P) for _ in range(r + 1 - la)]
    return audited_call(multiply, a, b, [0] * r, cfg, cfg=cfg)


def test_criterion_5_space_audit():
    # list buffers keep every transform on the interpreted path, where
    # the frame watcher sees the real working set
    cfg = default_config(instrument=True)
    fwd16, inv16 = _audit_transforms(cfg, 16)
    fwd4k, inv4k = _audit_transforms(cfg, 4096)
    mul16 = _audit_multiply(cfg, 16)
    mul4k = _audit_multiply(cfg, 4096)
    for name, rep in (
        ("tft@16", fwd16),
        ("tft@4096", fwd4k),
        ("itft@16", inv16),
        ("itft@4096", inv4k),
        ("multiply@16", mul16),
        ("multiply@4096", mul4k),
    ):
        assert rep.allocs == 0, f"{name} allocated {rep.allocs} buffers"
        assert rep.peak_aux_words <= 64, f"{name} used {rep.peak_aux_words} words"
    assert fwd16.peak_aux_words == fwd4k.peak_aux_words, "tft space grew with n"
    assert inv16.peak_aux_words == inv4k.peak_aux_words, "itft space grew with n"
    assert mul16.peak_aux_words == mul4k.peak_aux_words, "multiply space grew with n"
    print(
        "criterion 5: PASS zero allocations, peaks "
        f"tft={fwd4k.peak_aux_words} itft={inv4k.peak_aux_words} "
        f"multiply={mul4k.peak_aux_words} words, flat from n=16 to n=4096"
    )


def test_criterion_6_visit_counts():
    cfg = default_config()
    for n in range(1, 257):
        tr = []
        buf = [rng.randrange(P) for _ in range(n)]
        tft(buf, cfg, trace=tr)
        leaves = [S for tag, S in tr if tag == "L"]
        assert len(leaves) == len(set(leaves)) == n, f"leaf visits off at n={n}"
        assert all(is_leaf(S, n) for S in leaves)
        internal = Counter(S for tag, S in tr if tag != "L")
        assert len(internal) == n - 1, f"internal node count off at n={n}"
        assert all(c == 2 for c in internal.values()), f"double visit broke at n={n}"
        assert all(not is_leaf(S, n) for S in internal)
    print("criterion 6: PASS each leaf once, each internal node twice, n=1..256")


def test_criterion_7_operation_count_bound():
    cfg = default_config(instrument=True)
    pool = [rng.randrange(P) for _ in range(4096)]
    fft_cost = {}
    for k in range(1, 13):
        cfg.counters.reset()
        fft_pow2(make_buffer([0] * (1 << k), cfg), cfg)
        fft_cost[1 << k] = cfg.counters.mults
    worst_c = 0.0
    worst_n = 0
    for n in range(2, 4097):
        buf = make_buffer(pool[:n], cfg)
        cfg.counters.reset()
        tft(buf, cfg)
        mults = cfg.counters.mults
        c = mults / (n * math.log2(n + 1))
        if c > worst_c:
            worst_c, worst_n = c, n
        padded = 1 << (n - 1).bit_length()
        assert mults <= fft_cost[padded] + 4 * n, f"padded bound broke at n={n}"
    assert worst_c <= 4.0, f"C={worst_c:.4f} at n={worst_n} exceeds 4"
    print(
        f"criterion 7: PASS mults <= C n lg(n+1) with C={worst_c:.4f} "
        f"(worst n={worst_n}), and within fft+4n, n=2..4096"
    )


def test_criterion_8_read_only_inputs():
    cfg = default_config()
    for la, lb in ((1, 1), (17, 20), (256, 255), (1000, 1000)):
        a = make_buffer([rng.randrange(P) for _ in range(la)], cfg)
        b = make_buffer([rng.randrange(P) for _ in range(lb)], cfg)
        keep_a, keep_b = a.tobytes(), b.tobytes()
        multiply(a, b, zeros(la + lb - 1, cfg), cfg)
        assert a.tobytes() == keep_a and b.tobytes() == keep_b, (la, lb)
    print("criterion 8: PASS multiply inputs bit-identical before and after")


def test_criterion_9_block_schedule():
    for r in range(1, 4097):
        q = 0
        steps = 0
        for step in block_schedule(r):
            assert step.q == q, f"gap in cover at r={r}"
            assert 2 * step.L <= r - step.q < 4 * step.L, f"band broke at r={r}"
            assert step.q % step.L == 0, f"alignment broke at r={r}"
            q += step.L
            steps += 1
        assert q == (r - 1 if r > 1 else 0), f"cover stops early at r={r}"
        if r > 1:
            assert steps <= 2 * math.log2(r) + 1e-9, f"too many steps at r={r}"
    print("criterion 9: PASS schedule partitions [0, r-1) within bounds, r<=4096")
