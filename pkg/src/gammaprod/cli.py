"""Command-line front end.

    gammaprod eval 1/3 --digits 50
    gammaprod verify theorem1 --n-max 64 --format json
    gammaprod table cyclotomic --n-max 12

Exit codes: 0 all checks pass, 1 verification failure, 2 usage error,
3 domain error.  GAMMAPROD_PREC overrides the default precision.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, nstr

from gammaprod import numbertheory as nt
from gammaprod.cyclotomic import cyclotomic_poly
from gammaprod.identities import CATALOG, VerificationRecord, run_check
from gammaprod.numeric import PrecisionContext, lngamma_rational
from gammaprod.sequences import farey

DEFAULT_PREC = 256
# decimal exponent beyond which Gamma(r) itself is not printed
GAMMA_DISPLAY_EXP_LIMIT = 10**5

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


@dataclass
class RunConfig:
    command: str
    identity: str = "all"
    n_min: int = 1
    n_max: int = 64
    farey_order: int = 50
    prec_bits: int = DEFAULT_PREC
    fmt: str = "text"
    out_path: str | None = None
    jobs: int = 1


def _digits_to_bits(digits: int) -> int:
    return math.ceil(digits * 3.3219) + 16


def _resolve_prec(args) -> int:
    if getattr(args, "prec", None) and getattr(args, "digits", None):
        raise SystemExit(EXIT_USAGE)
    if getattr(args, "prec", None):
        return args.prec
    if getattr(args, "digits", None):
        return _digits_to_bits(args.digits)
    env = os.environ.get("GAMMAPROD_PREC")
    if env:
        try:
            return int(env)
        except ValueError:
            print("invalid GAMMAPROD_PREC: %r" % env, file=sys.stderr)
            raise SystemExit(EXIT_USAGE)
    return DEFAULT_PREC


def _record_dict(rec: VerificationRecord) -> dict:
    return {
        "identity_id": rec.identity_id,
        "parameter": rec.parameter,
        "prec_bits": rec.prec_bits,
        "lhs": rec.lhs,
        "rhs": rec.rhs,
        "abs_err": rec.abs_err,
        "rel_err": rec.rel_err,
        "pass": rec.passed,
        "elapsed_ms": rec.elapsed_ms,
    }


CSV_COLUMNS = ["identity_id", "parameter", "prec_bits", "lhs", "rhs",
               "abs_err", "rel_err", "pass", "elapsed_ms"]


def _emit_records(records, fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(_record_dict(rec)) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(CSV_COLUMNS)
        for rec in records:
            d = _record_dict(rec)
            writer.writerow([
                d["identity_id"], d["parameter"], d["prec_bits"], d["lhs"],
                d["rhs"], d["abs_err"], d["rel_err"],
                "true" if d["pass"] else "false", d["elapsed_ms"],
            ])
    else:
        for rec in records:
            out.write(
                "%-20s %6d  prec=%d  abs_err=%s  %s\n"
                % (rec.identity_id, rec.parameter, rec.prec_bits, rec.abs_err,
                   "PASS" if rec.passed else "FAIL")
            )


def _run_one(task):
    identity_id, parameter, prec_bits = task
    return run_check(identity_id, parameter, PrecisionContext(prec_bits))


def _verify_tasks(cfg: RunConfig) -> list[tuple[str, int, int]]:
    if cfg.identity == "all":
        ids = list(CATALOG)
    else:
        name = "theorem1_direct" if cfg.identity == "theorem1" else cfg.identity
        if name not in CATALOG:
            print("unknown identity: %s" % cfg.identity, file=sys.stderr)
            raise SystemExit(EXIT_USAGE)
        ids = [name]
    tasks = []
    for ident in ids:
        _, family, min_param = CATALOG[ident]
        if family == "n":
            lo = max(cfg.n_min, min_param)
            hi = cfg.n_max
        else:
            lo = min_param if cfg.identity != "all" else max(min_param, 2)
            hi = cfg.farey_order
        if hi < lo:
            print("empty or invalid parameter range for %s: [%d, %d]"
                  % (ident, lo, hi), file=sys.stderr)
            raise SystemExit(EXIT_USAGE)
        for p in range(lo, hi + 1):
            tasks.append((ident, p, cfg.prec_bits))
    return tasks


def cmd_verify(cfg: RunConfig) -> int:
    tasks = _verify_tasks(cfg)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            records = list(pool.map(_run_one, tasks, chunksize=8))
    else:
        records = [_run_one(t) for t in tasks]
    # deterministic order regardless of execution order
    order = {ident: i for i, ident in enumerate(CATALOG)}
    records.sort(key=lambda r: (order[r.identity_id], r.parameter))
    _write_output(records, cfg)
    return EXIT_OK if all(r.passed for r in records) else EXIT_VERIFY_FAIL


def _write_output(records, cfg: RunConfig) -> None:
    if cfg.out_path:
        with open(cfg.out_path, "w", encoding="utf-8", newline="") as fh:
            _emit_records(records, cfg.fmt, fh)
    else:
        _emit_records(records, cfg.fmt, sys.stdout)


def cmd_eval(raw: str, prec_bits: int) -> int:
    try:
        r = Fraction(raw)
    except (ValueError, ZeroDivisionError):
        print("cannot parse rational: %r" % raw, file=sys.stderr)
        return EXIT_USAGE
    if r <= 0:
        print("argument must be a positive rational, got %s" % r, file=sys.stderr)
        return EXIT_DOMAIN
    ctx = PrecisionContext(prec_bits)
    ln_gamma = lngamma_rational(r, ctx)
    digits = max(20, math.ceil(prec_bits * 0.30103))
    print("lnGamma(%s) = %s" % (r, nstr(ln_gamma, digits)))
    with mp.workprec(ctx.total_bits):
        decimal_exp = abs(ln_gamma) / mp.log(10)
        if decimal_exp < GAMMA_DISPLAY_EXP_LIMIT:
            print("Gamma(%s)   = %s" % (r, nstr(mp.exp(ln_gamma), digits)))
        else:
            print("Gamma(%s) omitted: magnitude ~10^%s exceeds display range"
                  % (r, nstr(decimal_exp, 6)))
    return EXIT_OK


def _lambda_symbolic(vec: nt.LogVector) -> str:
    if vec.is_zero():
        return "0"
    return " + ".join("%d*log %d" % (c, p) for p, c in sorted(vec.coeffs.items()))


def _table_rows(kind: str, cfg: RunConfig) -> list[tuple]:
    ctx = PrecisionContext(cfg.prec_bits)
    if kind == "phi":
        return [(n, nt.phi(n)) for n in range(1, cfg.n_max + 1)]
    if kind == "mu":
        return [(n, nt.mobius(n)) for n in range(1, cfg.n_max + 1)]
    if kind == "lambda":
        rows = []
        for n in range(1, cfg.n_max + 1):
            vec = nt.mangoldt(n)
            rows.append((n, _lambda_symbolic(vec), nstr(vec.to_mpf(ctx), 20)))
        return rows
    if kind == "cyclotomic":
        return [(n, str(cyclotomic_poly(n))) for n in range(1, cfg.n_max + 1)]
    if kind == "farey":
        return [(str(r),) for r in farey(cfg.farey_order)]
    raise SystemExit(EXIT_USAGE)


def cmd_table(kind: str, cfg: RunConfig) -> int:
    rows = _table_rows(kind, cfg)
    buf = io.StringIO()
    if cfg.fmt == "json":
        for row in rows:
            buf.write(json.dumps(list(row)) + "\n")
    elif cfg.fmt == "csv":
        writer = csv.writer(buf)
        for row in rows:
            writer.writerow(row)
    else:
        for row in rows:
            buf.write("  ".join(str(c) for c in row) + "\n")
    if cfg.out_path:
        with open(cfg.out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gammaprod", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add_prec(p):
        p.add_argument("--prec", type=int, help="precision in bits")
        p.add_argument("--digits", type=int, help="precision in decimal digits")

    p_eval = sub.add_parser("eval", help="evaluate lnGamma and Gamma at a rational")
    p_eval.add_argument("rational", help="positive rational, e.g. 1/3")
    add_prec(p_eval)

    p_verify = sub.add_parser("verify", help="run identity checks over a range")
    p_verify.add_argument("identity", help="catalog id, 'theorem1', or 'all'")
    p_verify.add_argument("--n-min", type=int, default=1)
    p_verify.add_argument("--n-max", type=int, default=64)
    p_verify.add_argument("--N", type=int, default=50, dest="farey_order",
                          help="Farey order cap for the N-family checks")
    add_prec(p_verify)
    p_verify.add_argument("--format", choices=["json", "csv", "text"], default="text")
    p_verify.add_argument("--out", default=None)
    p_verify.add_argument("--jobs", type=int, default=os.cpu_count() or 1)

    p_table = sub.add_parser("table", help="emit exact value tables")
    p_table.add_argument("kind", choices=["phi", "mu", "lambda", "cyclotomic", "farey"])
    p_table.add_argument("--n-max", type=int, default=20)
    p_table.add_argument("--N", type=int, default=10, dest="farey_order")
    add_prec(p_table)
    p_table.add_argument("--format", choices=["json", "csv", "text"], default="text")
    p_table.add_argument("--out", default=None)
    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "eval" and "--" not in argv:
        # let negative rationals like -1/2 through argparse so they can be
        # rejected as a domain error rather than a flag parse error
        for i, tok in enumerate(argv[1:], start=1):
            if len(tok) > 1 and tok[0] == "-" and tok[1].isdigit():
                argv.insert(i, "--")
                break
    try:
        args = _build_parser().parse_args(argv)
        prec = _resolve_prec(args)
        if args.command == "eval":
            return cmd_eval(args.rational, prec)
        cfg = RunConfig(
            command=args.command,
            identity=getattr(args, "identity", "all"),
            n_min=getattr(args, "n_min", 1),
            n_max=getattr(args, "n_max", 64),
            farey_order=getattr(args, "farey_order", 50),
            prec_bits=prec,
            fmt=getattr(args, "format", "text"),
            out_path=getattr(args, "out", None),
            jobs=getattr(args, "jobs", 1),
        )
        if args.command == "verify":
            return cmd_verify(cfg)
        return cmd_table(args.kind, cfg)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ValueError as exc:
        print("domain error: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
