"""Command-line front end.

Subcommands: table (recompute a published comparison table and mark
MATCH/MISMATCH per row), search (minimize keysize subject to a
workfactor target), bounds (decoding-radius data for plotting), and
keygen/encrypt/decrypt on files.  Exit status: 0 success, 2 when a
verified table contains any MISMATCH row, 1 on errors.
"""

import argparse
import csv
import sys
from functools import lru_cache

from .goppa import CodeConstructionError
from .scheme import (
    Cryptogram, DecryptionError, KeyPair, decrypt, encrypt, keygen,
)
from .security import fs_workfactor, radii
from .tables import verify_table

ROW_FIELDS = ("method", "m", "n", "k", "r", "tau2", "wf", "keysize", "gain")


def _open_out(args):
    if args.out:
        return open(args.out, "w", newline="")
    return sys.stdout


def _writer(fh, args):
    delim = "\t" if args.format == "tsv" else ","
    return csv.writer(fh, delimiter=delim, lineterminator="\n")


def _fmt_row(row):
    return [row["method"], row["m"], row["n"], row["k"], row["r"],
            "" if row["tau2"] is None else row["tau2"],
            "%.3f" % row["wf"], row["keysize"],
            "" if row["gain"] is None else "%.2f" % row["gain"]]


def cmd_table(args):
    rows = verify_table(args.table)
    fh = _open_out(args)
    try:
        w = _writer(fh, args)
        if args.table == 4:
            w.writerow(("level", "dlp", "mceliece", "ratio"))
            for row in rows:
                w.writerow((row["level"], row["dlp"], row["mceliece"],
                            "%.1f" % row["ratio"]))
        else:
            w.writerow(ROW_FIELDS + ("status",))
            for row in rows:
                w.writerow(_fmt_row(row) + [row["status"]])
    finally:
        if fh is not sys.stdout:
            fh.close()
    return 2 if any(r["status"] == "MISMATCH" for r in rows) else 0


@lru_cache(maxsize=None)
def _rate(n, m, r, decoder):
    """(workfactor, w) on the design dimension k = n - mr, else None."""
    k = n - m * r
    if k < 1:
        return None
    if decoder == "ld":
        try:
            w = radii(n, r).ld_errors
        except ValueError:
            return None
    else:
        w = r
    if not 0 < w < n - k:
        return None
    return fs_workfactor(n, k, w), w


def _min_feasible(m, r, decoder, target, lo, hi, step):
    # workfactor grows with n at fixed (m, r), so bisect the grid
    got = _rate(hi, m, r, decoder)
    if got is None or got[0] < target:
        return None
    while lo < hi:
        mid = lo + ((hi - lo) // (2 * step)) * step
        got = _rate(mid, m, r, decoder)
        if got is not None and got[0] >= target:
            hi = mid
        else:
            lo = mid + step
    return hi


def search_params(target, variant, decoder, countermeasure="none"):
    """Smallest-key parameter row with WF >= target, or None.

    Ties break deterministically on (keysize, n, m).  The dyadic grid
    walks r over powers of two with r | n; cm1 caps n below r(r+1) and
    cm2 restricts to m = 16.  The search scores the design dimension
    k = n - mr; key generation still validates per instance.
    """
    if not 60 <= target <= 300:
        raise ValueError("target workfactor must lie in [60, 300]")
    best = None
    for m in range(10, 17):
        if variant == "dyadic":
            if countermeasure == "cm2" and m < 16:
                continue
            r = 2
            while (m + 1) * r <= (1 << m):
                hi = 1 << m
                if countermeasure == "cm1":
                    hi = min(hi, r * r)
                lo = (m + 1) * r
                if decoder == "ld":
                    lo = max(lo, -(-(4 * r + 2) // r) * r)
                if lo <= hi:
                    n = _min_feasible(m, r, decoder, target, lo, hi, r)
                    if n is not None:
                        k = n - m * r
                        cand = (m * k, n, m, r, k)
                        if best is None or cand[:3] < best[:3]:
                            best = cand
                r *= 2
        else:
            # small r cannot reach the target at all, so the miss
            # counter starts only once r enters the feasible region
            misses = 0
            seen_feasible = False
            r = 0
            while misses < 25 and m * (r + 1) + 1 <= (1 << m):
                r += 1
                n = _min_feasible(m, r, decoder, target,
                                  m * r + 1, 1 << m, 1)
                improved = False
                if n is not None:
                    seen_feasible = True
                    k = n - m * r
                    cand = (m * r * k, n, m, r, k)
                    if best is None or cand[:3] < best[:3]:
                        best = cand
                        improved = True
                if seen_feasible:
                    misses = 0 if improved else misses + 1
    if best is None:
        return None
    ks, n, m, r, k = best
    wf, w = _rate(n, m, r, decoder)
    return {"method": "LD" if decoder == "ld" else "UD", "m": m, "n": n,
            "k": k, "r": r, "tau2": w if decoder == "ld" else None,
            "wf": wf, "keysize": ks, "gain": None}


def cmd_search(args):
    row = search_params(args.target, args.variant, args.decoder,
                        args.countermeasure)
    if row is None:
        print("no feasible parameters for target %.1f" % args.target,
              file=sys.stderr)
        return 1
    fh = _open_out(args)
    try:
        w = _writer(fh, args)
        w.writerow(ROW_FIELDS)
        w.writerow(_fmt_row(row))
    finally:
        if fh is not sys.stdout:
            fh.close()
    return 0


def cmd_bounds(args):
    if args.tmax < 1 or 4 * args.tmax + 2 > args.n:
        raise ValueError("need 1 <= tmax and 4*tmax + 2 <= n")
    fh = _open_out(args)
    try:
        w = _writer(fh, args)
        w.writerow(("t", "t_over_n", "unique", "generic", "bernstein",
                    "tau2"))
        for t in range(1, args.tmax + 1):
            rep = radii(args.n, t)
            w.writerow(("%d" % t,) + tuple(
                "%.6f" % (v / args.n) for v in
                (t, t, rep.generic_johnson, rep.bernstein, rep.tau2)))
    finally:
        if fh is not sys.stdout:
            fh.close()
    return 0


def _seed(text):
    try:
        seed = bytes.fromhex(text)
    except ValueError:
        raise ValueError("seed must be hex digits")
    if not seed:
        raise ValueError("seed must be nonempty")
    return seed


def cmd_keygen(args):
    kp = keygen(args.variant, args.m, args.n, args.r, args.decoder,
                _seed(args.seed))
    kp.save(args.out)
    print("%s %s key: n=%d k=%d r=%d w_enc=%d capacity=%dB -> %s"
          % (kp.variant, kp.decoder, kp.n, kp.k, kp.r, kp.w_enc,
             kp.capacity(), args.out))
    return 0


def cmd_encrypt(args):
    kp = KeyPair.load(args.key)
    with open(args.infile, "rb") as fh:
        msg = fh.read()
    encrypt(kp, msg, _seed(args.seed)).save(args.out)
    return 0


def cmd_decrypt(args):
    kp = KeyPair.load(args.key)
    msg = decrypt(kp, Cryptogram.load(args.infile))
    with open(args.out, "wb") as fh:
        fh.write(msg)
    return 0


def _add_output_opts(p):
    p.add_argument("--out", help="write to this file instead of stdout")
    p.add_argument("--format", choices=("csv", "tsv"), default="csv")


def build_parser():
    p = argparse.ArgumentParser(
        prog="goppacrypt",
        description="Goppa-code McEliece toolkit: tables, parameter "
                    "search, bounds, and file encryption.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="recompute a published table")
    t.add_argument("table", type=int, choices=(1, 2, 3, 4))
    _add_output_opts(t)
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("search", help="minimize keysize at a WF target")
    s.add_argument("target", type=float)
    s.add_argument("--variant", choices=("generic", "dyadic"),
                   required=True)
    s.add_argument("--decoder", choices=("ud", "ld"), required=True)
    s.add_argument("--countermeasure", choices=("cm1", "cm2", "none"),
                   default="none")
    _add_output_opts(s)
    s.set_defaults(func=cmd_search)

    b = sub.add_parser("bounds", help="normalized decoding radii 1..tmax")
    b.add_argument("n", type=int)
    b.add_argument("tmax", type=int)
    _add_output_opts(b)
    b.set_defaults(func=cmd_bounds)

    g = sub.add_parser("keygen", help="generate a key file")
    g.add_argument("--variant", choices=("generic", "dyadic"),
                   required=True)
    g.add_argument("--decoder", choices=("ud", "ld"), required=True)
    g.add_argument("-m", type=int, required=True)
    g.add_argument("-n", type=int, required=True)
    g.add_argument("-r", type=int, required=True)
    g.add_argument("--seed", required=True, help="hex seed")
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_keygen)

    e = sub.add_parser("encrypt", help="encrypt a file")
    e.add_argument("--key", required=True)
    e.add_argument("--in", dest="infile", required=True)
    e.add_argument("--seed", required=True, help="hex seed")
    e.add_argument("--out", required=True)
    e.set_defaults(func=cmd_encrypt)

    d = sub.add_parser("decrypt", help="decrypt a file")
    d.add_argument("--key", required=True)
    d.add_argument("--in", dest="infile", required=True)
    d.add_argument("--out", required=True)
    d.set_defaults(func=cmd_decrypt)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, CodeConstructionError, DecryptionError,
            OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
