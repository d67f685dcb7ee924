"""Command-line front end: transforms and products on coefficient files.

File format, one value per line, decimal:

    p <modulus>
    w <root> <k>        (optional; root has order exactly 2^k mod p)
    <coefficient>
    ...

Coefficients live in [0, p).  Output files always carry both header
lines, so a written file round-trips byte-identically.  The bench
subcommand prints CSV with measured multiplication counts next to the
padded power-of-two counts, which makes the smooth growth of the
arbitrary-length transform visible against the doubling jumps.

Exit codes: 0 success, 2 malformed input, 3 bad modulus or root, 4
length beyond what the root supports.
"""

import argparse
import os
import random
import sys
import time

from .modring import (
    RingConfig,
    RingConfigError,
    UnsupportedSizeError,
    ceil_lg,
    config_for_modulus,
    default_config,
    make_buffer,
    zeros,
)
from .oracle import audited_call, naive_dft, schoolbook_mul
from .polymul import multiply
from .transforms import fft_pow2, itft, tft

# tft of (1, 2, 3, 4) over the default modulus, fixed by the quadratic
# evaluation oracle; the self test replays it against the fast path.
_KNOWN_ANSWER = (10, 998244351, 173167434, 825076915)

EXIT_PARSE = 2
EXIT_RING = 3
EXIT_SIZE = 4


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def parse_coeff_file(path):
    """Read one coefficient file; returns (p, root_or_None, coeffs).

    Range checks against p happen in build_config once overrides are
    settled; here only the shape and integerness of every line.
    """
    try:
        with open(path, "r", encoding="ascii") as f:
            lines = f.read().splitlines()
    except OSError as e:
        raise CliError(EXIT_PARSE, f"{path}: {e.strerror or e}") from e
    rows = [ln.strip() for ln in lines if ln.strip()]
    if not rows or not rows[0].startswith("p "):
        raise CliError(EXIT_PARSE, f"{path}: first line must be 'p <modulus>'")
    try:
        p = int(rows[0][2:])
    except ValueError:
        raise CliError(EXIT_PARSE, f"{path}: bad modulus line {rows[0]!r}") from None
    i = 1
    root = None
    if i < len(rows) and rows[i].startswith("w "):
        parts = rows[i].split()
        if len(parts) != 3:
            raise CliError(EXIT_PARSE, f"{path}: bad root line {rows[i]!r}")
        try:
            root = (int(parts[1]), int(parts[2]))
        except ValueError:
            raise CliError(EXIT_PARSE, f"{path}: bad root line {rows[i]!r}") from None
        i += 1
    coeffs = []
    for row in rows[i:]:
        try:
            coeffs.append(int(row))
        except ValueError:
            raise CliError(EXIT_PARSE, f"{path}: bad coefficient {row!r}") from None
    if not coeffs:
        raise CliError(EXIT_PARSE, f"{path}: no coefficients")
    return p, root, coeffs


def write_coeff_file(path, cfg, coeffs):
    with open(path, "w", encoding="ascii") as f:
        f.write(f"p {cfg.p}\n")
        f.write(f"w {cfg.omegaK} {cfg.K}\n")
        for c in coeffs:
            f.write(f"{c}\n")


def build_config(file_p, file_root, args):
    """Apply --modulus/--root/--k over the file header and validate."""
    if (args.root is None) != (args.k is None):
        raise CliError(EXIT_PARSE, "--root and --k must be given together")
    p = args.modulus if args.modulus is not None else file_p
    root = None
    if args.root is not None:
        root = (args.root, args.k)
    elif file_root is not None and p == file_p:
        # a file root only describes the file's own modulus
        root = file_root
    try:
        if root is None:
            return config_for_modulus(p)
        return RingConfig(p, root[0], root[1])
    except RingConfigError as e:
        raise CliError(EXIT_RING, str(e)) from e


def check_range(coeffs, cfg, path):
    for c in coeffs:
        if not 0 <= c < cfg.p:
            raise CliError(EXIT_PARSE, f"{path}: coefficient {c} outside [0, {cfg.p})")


def _load(path, args):
    p, root, coeffs = parse_coeff_file(path)
    cfg = build_config(p, root, args)
    check_range(coeffs, cfg, path)
    return cfg, coeffs


def cmd_transform(args, inverse):
    cfg, coeffs = _load(args.infile, args)
    try:
        buf = make_buffer(coeffs, cfg)
        (itft if inverse else tft)(buf, cfg)
    except UnsupportedSizeError as e:
        raise CliError(EXIT_SIZE, str(e)) from e
    write_coeff_file(args.outfile, cfg, buf)
    return 0


def cmd_multiply(args):
    cfg_a, a = _load(args.afile, args)
    cfg_b, b = _load(args.bfile, args)
    if cfg_a.p != cfg_b.p or cfg_a.omegaK != cfg_b.omegaK or cfg_a.K != cfg_b.K:
        raise CliError(EXIT_RING, "input files use different rings")
    try:
        out = zeros(len(a) + len(b) - 1, cfg_a)
        multiply(make_buffer(a, cfg_a), make_buffer(b, cfg_a), out, cfg_a)
    except UnsupportedSizeError as e:
        raise CliError(EXIT_SIZE, str(e)) from e
    write_coeff_file(args.outfile, cfg_a, out)
    return 0


def cmd_bench(args):
    if args.nmin < 1 or args.nmin > args.nmax:
        raise CliError(EXIT_PARSE, "need 1 <= nmin <= nmax")
    if args.trials < 1:
        raise CliError(EXIT_PARSE, "need at least one trial")
    count_cfg = default_config(instrument=True)
    time_cfg = default_config()
    if args.nmax > 1 << count_cfg.K:
        raise CliError(EXIT_SIZE, f"nmax {args.nmax} exceeds 2^{count_cfg.K}")
    rng = random.Random(0)
    out = sys.stdout
    out.write("n,mulcount_tft,mulcount_fft_padded,wall_ns_tft,wall_ns_multiply\n")
    for n in range(args.nmin, args.nmax + 1):
        data = [rng.randrange(count_cfg.p) for _ in range(n)]
        buf = make_buffer(data, count_cfg)
        count_cfg.counters.reset()
        tft(buf, count_cfg)
        mc_tft = count_cfg.counters.mults
        padded = 1 << ceil_lg(n)
        pbuf = zeros(padded, count_cfg)
        count_cfg.counters.reset()
        fft_pow2(pbuf, count_cfg)
        mc_fft = count_cfg.counters.mults
        wall_tft = None
        for _ in range(args.trials):
            tbuf = make_buffer(data, time_cfg)
            t0 = time.perf_counter_ns()
            tft(tbuf, time_cfg)
            dt = time.perf_counter_ns() - t0
            wall_tft = dt if wall_tft is None else min(wall_tft, dt)
        # product sized so the output has exactly n coefficients
        m = (n + 1) // 2
        a = make_buffer([rng.randrange(time_cfg.p) for _ in range(m)], time_cfg)
        b = make_buffer([rng.randrange(time_cfg.p) for _ in range(n + 1 - m)], time_cfg)
        prod = zeros(n, time_cfg)
        wall_mul = None
        for _ in range(args.trials):
            t0 = time.perf_counter_ns()
            multiply(a, b, prod, time_cfg)
            dt = time.perf_counter_ns() - t0
            wall_mul = dt if wall_mul is None else min(wall_mul, dt)
        out.write(f"{n},{mc_tft},{mc_fft},{wall_tft},{wall_mul}\n")
    return 0


def cmd_selftest(args):
    seed = args.seed
    rng = random.Random(seed)
    cfg = default_config(instrument=True)
    if os.environ.get("TFTMUL_SELFTEST_CORRUPT"):
        # debug hook: sabotage the root so the harness must notice
        cfg.omegaK += 1

    def fail(what):
        print(f"selftest FAILED: {what}; reproduce with --seed {seed}")
        return 1

    try:
        RingConfig(cfg.p, cfg.omegaK, cfg.K)
    except RingConfigError as e:
        return fail(f"ring validation ({e})")

    small = RingConfig(17, 3, 4)
    buf = make_buffer([1, 1, 1], small)
    tft(buf, small)
    if list(buf) != [3, 1, 13]:
        return fail("fixed transform answer over p=17")
    out = zeros(4, small)
    multiply(make_buffer([2, 3], small), make_buffer([4, 5, 6], small), out, small)
    if list(out) != [8, 5, 10, 1]:
        return fail("fixed product answer over p=17")

    buf = make_buffer([1, 2, 3, 4], cfg)
    tft(buf, cfg)
    if tuple(buf) != _KNOWN_ANSWER:
        return fail("fixed transform answer over the default modulus")

    for n in range(1, 97):
        data = [rng.randrange(cfg.p) for _ in range(n)]
        buf = make_buffer(data, cfg)
        tft(buf, cfg)
        if n <= 48 and list(buf) != naive_dft(data, cfg)[:n]:
            return fail(f"oracle mismatch at n={n}")
        itft(buf, cfg)
        if list(buf) != data:
            return fail(f"round trip at n={n}")

    for _ in range(30):
        m = rng.randrange(1, 25)
        n = rng.randrange(1, 25)
        a = [rng.randrange(cfg.p) for _ in range(m)]
        b = [rng.randrange(cfg.p) for _ in range(n)]
        out = zeros(m + n - 1, cfg)
        multiply(make_buffer(a, cfg), make_buffer(b, cfg), out, cfg)
        if list(out) != schoolbook_mul(a, b, cfg):
            return fail(f"product mismatch at {m}x{n}")

    reports = {}
    for n in (16, 512):
        buf = make_buffer([rng.randrange(cfg.p) for _ in range(n)], cfg)
        reports[n] = audited_call(tft, buf, cfg, cfg=cfg)
    if reports[16].allocs or reports[512].allocs:
        return fail("transform allocated a buffer")
    if reports[16].peak_aux_words != reports[512].peak_aux_words:
        return fail("auxiliary space grew with n")
    if reports[512].peak_aux_words > 64:
        return fail("auxiliary space above 64 words")

    print(f"selftest passed (seed {seed})")
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="tftmul",
        description="Arbitrary-length in-place transforms and products over a prime field.",
    )
    parser.add_argument("--modulus", type=int, help="override the file modulus")
    parser.add_argument("--root", type=int, help="override the file root (needs --k)")
    parser.add_argument("--k", type=int, help="power-of-two order of --root")
    sub = parser.add_subparsers(dest="command", required=True)

    p_tft = sub.add_parser("tft", help="forward transform of a coefficient file")
    p_tft.add_argument("infile")
    p_tft.add_argument("outfile")
    p_itft = sub.add_parser("itft", help="inverse transform of a coefficient file")
    p_itft.add_argument("infile")
    p_itft.add_argument("outfile")
    p_mul = sub.add_parser("multiply", help="polynomial product of two files")
    p_mul.add_argument("afile")
    p_mul.add_argument("bfile")
    p_mul.add_argument("outfile")
    p_bench = sub.add_parser("bench", help="CSV of counts and wall times per length")
    p_bench.add_argument("--nmin", type=int, default=2)
    p_bench.add_argument("--nmax", type=int, default=128)
    p_bench.add_argument("--trials", type=int, default=3)
    p_self = sub.add_parser("selftest", help="run the reduced validation suite")
    p_self.add_argument("--seed", type=int, default=0)

    args = parser.parse_args(argv)
    try:
        if args.command == "tft":
            return cmd_transform(args, inverse=False)
        if args.command == "itft":
            return cmd_transform(args, inverse=True)
        if args.command == "multiply":
            return cmd_multiply(args)
        if args.command == "bench":
            return cmd_bench(args)
        return cmd_selftest(args)
    except CliError as e:
        print(f"tftmul: {e}", file=sys.stderr)
        return e.code


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
