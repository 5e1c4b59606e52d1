"""Command line interface: ``matrixf5 {gb,bench,bounds,gen,verify}``.

Exit codes: 0 success, 1 usage error, 2 input error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import bounds, f5engine, macaulay, oracle, regularity
from .field import DEFAULT_PRIME, PrimeField
from .polynomial import Polynomial
from .sysfile import SystemFileError, format_system, read_system

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3

CHECKS = ("regular", "noether", "snp", "gb-oracle", "structure")
BENCH_LIMIT_LOG2 = 40


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def int_range(text: str) -> list[int]:
    """'7', '4:8' (inclusive) or '4,6,8'."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            a, b = part.split(":", 1)
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    return out


def float_list(text: str) -> list[float]:
    vals = []
    for part in text.split(","):
        part = part.strip().lower()
        if part in ("strassen", "log2(7)", "log27"):
            vals.append(bounds.STRASSEN)
        elif part:
            vals.append(float(part))
    return vals


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# system loading


def _homogenize_all(polys: list[Polynomial]) -> list[Polynomial]:
    names = list(polys[0].names)
    new = "h"
    k = 0
    while new in names:
        k += 1
        new = f"h{k}"
    return [f.homogenize(new) for f in polys]


def load_system(path: str, prime: int | None = None, homogenize: bool = False) -> list[Polynomial]:
    sf = read_system(path, prime)
    polys = sf.polys
    if not polys:
        raise InputError(f"{path}: the system is empty")
    if any(not f for f in polys):
        raise InputError(f"{path}: the system contains the zero polynomial")
    if homogenize:
        polys = _homogenize_all(polys)
    bad = [f for f in polys if not f.is_homogeneous()]
    if bad:
        raise InputError(f"{path}: non-homogeneous polynomial {bad[0]} (use --homogenize)")
    # matrix-F5 wants nondecreasing degrees; stable sort keeps the file order otherwise
    return sorted(polys, key=lambda f: f.degree)


# ---------------------------------------------------------------------------
# gb


def _gb_payload(result: f5engine.F5Result, names) -> dict:
    bases = []
    for G in result.bases:
        bases.append([{"signature": g.signature.to_str(names), "degree": g.degree,
                       "polynomial": g.polynomial.to_str(names)} for g in G])
    reduced = [f.to_str(names) for f in result.reduced_basis()]
    return {
        "system": [f.to_str(names) for f in result.system],
        "vars": list(names),
        "D": result.D,
        "bases": bases,
        "reduced_basis": reduced,
        "stats": result.stats.as_dict(),
    }


def _gb_text(payload: dict) -> str:
    out = io.StringIO()
    out.write(f"# degree bound D = {payload['D']}\n")
    for i, G in enumerate(payload["bases"], start=1):
        out.write(f"G_{i}:\n")
        for g in G:
            out.write(f"  {g['signature']}  {g['polynomial']}\n")
    out.write("reduced basis:\n")
    for f in payload["reduced_basis"]:
        out.write(f"  {f}\n")
    tot = payload["stats"]["totals"]
    out.write("stats: " + ", ".join(f"{k}={v}" for k, v in tot.items())
              + f", polys_computed={payload['stats']['polys_computed']}\n")
    return out.getvalue()


def cmd_gb(args) -> int:
    polys = load_system(args.system, args.prime, args.homogenize)
    names = polys[0].names
    D = args.degree_bound
    if D is not None and D < 1:
        raise InputError("--degree-bound must be >= 1")
    if D is not None and D < polys[0].degree:
        raise InputError(f"--degree-bound {D} is below the smallest degree {polys[0].degree}")
    if args.dump_macaulay is not None:
        macaulay.dump_csv(polys, args.dump_macaulay, args.dump_macaulay_path or "macaulay.csv", names)
    result = f5engine.run(polys, D, args.mode)
    payload = _gb_payload(result, names)
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d", "i", "rows", "new_rows", "excluded", "mults", "norms", "zero_reductions"])
        for s in payload["stats"]["per_step"]:
            w.writerow([s["d"], s["i"], s["rows"], s["new_rows"], s["excluded"], s["mults"],
                        s["norms"], s["zero_reductions"]])
        text = buf.getvalue()
    else:
        text = _gb_text(payload)
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench


@dataclass
class BenchRow:
    n: int
    delta: int
    mode: str
    seed: int
    system_seed: int
    mults: int
    log2_mults: float
    log2_nf5: float
    polys: int
    polys_lt: int
    polys_bound: int
    zero_reductions: int
    snp: bool

    def key(self):
        return (self.n, self.delta, self.seed, self.mode)


BENCH_HEADER = ["n", "delta", "mode", "seed", "log2_mults", "log2_nf5_exact", "polys",
                "polys_bound", "zero_reductions", "mults", "polys_lt", "system_seed", "snp"]


def attempt_seed(seed: int, attempt: int) -> int:
    if attempt == 0:
        return seed
    return int(np.random.default_rng([seed, attempt]).integers(0, 2**62))


def snp_system(n: int, delta: int, seed: int, p: int = DEFAULT_PRIME, retries: int = 5):
    """Generate a dense system and retry with derived seeds until it is in
    simultaneous Noether position.  Returns (system, system_seed)."""
    for attempt in range(retries):
        s = attempt_seed(seed, attempt)
        system = regularity.gen_system(regularity.SystemSpec.uniform(n, delta, p=p, seed=s))
        if regularity.is_snp(system):
            return system, s
    raise regularity.RegularityError(
        f"no system in simultaneous Noether position for n={n}, delta={delta}, seed={seed}")


def bench_instance(n: int, delta: int, mode: str, seed: int, p: int = DEFAULT_PRIME,
                   retries: int = 5, system=None, system_seed=None) -> BenchRow:
    if system is None:
        system, system_seed = snp_system(n, delta, seed, p, retries)
    res = f5engine.run(system, None, mode)
    mults = res.stats.mults
    return BenchRow(
        n=n, delta=delta, mode=mode, seed=seed, system_seed=system_seed, mults=mults,
        log2_mults=math.log2(mults) if mults else 0.0,
        log2_nf5=bounds.log2_int(bounds.nf5_exact(n, n, delta)),
        polys=res.polys_computed(), polys_lt=res.polys_in_basis(),
        polys_bound=bounds.polys_bound(delta, n), zero_reductions=res.stats.zero_reductions,
        snp=True,
    )


def run_bench(ns, delta: int, modes, seeds, p=DEFAULT_PRIME, workers: int = 1, retries: int = 5):
    tasks = []
    for n in ns:
        if n < 1:
            continue
        for seed in seeds:
            tasks.append((n, seed))

    def one(task):
        n, seed = task
        system, s = snp_system(n, delta, seed, p, retries)
        return [bench_instance(n, delta, mode, seed, p, system=system, system_seed=s) for mode in modes]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(one, tasks))
    else:
        chunks = [one(t) for t in tasks]
    rows = [r for chunk in chunks for r in chunk]
    return sorted(rows, key=BenchRow.key)


def cmd_bench(args) -> int:
    ns = int_range(args.n)
    modes = ["top", "full"] if args.mode == "both" else [args.mode]
    if args.seeds is not None:
        seeds = int_range(args.seeds)
    else:
        seeds = [args.seed + r for r in range(args.reps)]
    for n in ns:
        if n >= 1 and not args.force:
            lg = bounds.log2_int(bounds.nf5_exact(n, n, args.delta))
            if lg > BENCH_LIMIT_LOG2:
                raise InputError(f"n={n}, delta={args.delta}: N_F5 = 2^{lg:.1f} exceeds 2^{BENCH_LIMIT_LOG2}; "
                                 "use --force to run anyway")
    try:
        rows = run_bench(ns, args.delta, modes, seeds, args.prime or DEFAULT_PRIME, args.workers)
    except regularity.RegularityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.format == "json":
        text = json.dumps([r.__dict__ for r in rows], indent=2) + "\n"
    else:
        buf = io.StringIO()
        if args.format == "csv":
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(BENCH_HEADER)
        for r in rows:
            vals = [r.n, r.delta, r.mode, r.seed, f"{r.log2_mults:.2f}", f"{r.log2_nf5:.2f}", r.polys,
                    r.polys_bound, r.zero_reductions, r.mults, r.polys_lt, r.system_seed, int(r.snp)]
            if args.format == "csv":
                w.writerow(vals)
            else:
                buf.write(" ".join(str(v) for v in vals) + "\n")
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# bounds


def cmd_bounds(args) -> int:
    deltas = int_range(args.delta)
    ns = int_range(args.n)
    omegas = float_list(args.omega)
    if any(d < 2 for d in deltas):
        raise InputError("delta must be >= 2")
    reports = []
    for delta in deltas:
        for n in ns:
            if n - args.ell >= 1:
                reports.append(bounds.report(delta, n, args.ell, omegas))
    if args.format == "json":
        text = json.dumps([r.as_dict() for r in reports], indent=2) + "\n"
    else:
        buf = io.StringIO()
        if args.format == "csv":
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(bounds.BoundReport.csv_header(omegas))
            for r in reports:
                w.writerow(r.csv_row())
        else:
            for r in reports:
                buf.write(f"delta={r.delta} n={r.n} ell={r.ell} D={r.D} "
                          f"log2 N_F5={r.log2_nf5_exact:.2f} asym={r.log2_nf5_asymptotic:.2f} "
                          f"lambda0={r.lambda0:.6f} log2 B={r.log2_B:.6f} A={r.A:.4g}\n")
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# gen / verify


def cmd_gen(args) -> int:
    p = args.prime or DEFAULT_PRIME
    if args.degrees:
        degrees = tuple(sorted(int_range(args.degrees)))
        m = len(degrees)
    else:
        m = args.m or args.n
        degrees = (args.delta,) * m
    try:
        spec = regularity.SystemSpec(args.n, m, degrees, p, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    stamp = "snp=unchecked"
    system = None
    used = spec.seed
    attempts = 1 if args.no_verify else args.retries
    for attempt in range(attempts):
        used = attempt_seed(spec.seed, attempt)
        cand = regularity.gen_system(regularity.SystemSpec(spec.n, spec.m, spec.degrees, p, used))
        if args.no_verify:
            system = cand
            break
        if regularity.is_snp(cand):
            system = cand
            stamp = "snp=pass"
            break
    if system is None:
        print(f"error: no system in simultaneous Noether position after {attempts} attempts",
              file=sys.stderr)
        return EXIT_VERIFY
    comments = [f"generated n={spec.n} m={spec.m} degrees={','.join(map(str, spec.degrees))} "
                f"p={p} seed={spec.seed} system_seed={used}", f"verified {stamp}"]
    _emit(format_system(system, comments=comments), args.out)
    return EXIT_OK


def run_checks(polys: list[Polynomial], checks) -> dict:
    out = {}
    for check in checks:
        if check == "regular":
            out[check] = regularity.is_regular(polys)
        elif check == "noether":
            out[check] = regularity.is_noether_position(polys, len(polys))
        elif check == "snp":
            out[check] = regularity.is_snp(polys)
        elif check == "gb-oracle":
            res = f5engine.run(polys)
            out[check] = oracle.compare_lt_ideals(res.reduced_basis(), oracle.buchberger(polys))
        elif check == "structure":
            res = f5engine.run(polys)
            out[check] = f5engine.structure_check(res, snp=True).ok
        else:
            raise InputError(f"unknown check {check!r}")
    return out


def cmd_verify(args) -> int:
    polys = load_system(args.system, args.prime, args.homogenize)
    checks = [c.strip() for c in args.check.split(",") if c.strip()] if args.check else list(CHECKS)
    for c in checks:
        if c not in CHECKS:
            raise InputError(f"unknown check {c!r}; choose from {', '.join(CHECKS)}")
    results = run_checks(polys, checks)
    if args.format == "json":
        text = json.dumps({c: ("pass" if ok else "fail") for c, ok in results.items()}, indent=2) + "\n"
    elif args.format == "csv":
        text = "check,result\n" + "".join(f"{c},{'pass' if ok else 'fail'}\n" for c, ok in results.items())
    else:
        text = "".join(f"{c}: {'pass' if ok else 'fail'}\n" for c, ok in results.items())
    _emit(text, args.out)
    return EXIT_OK if all(results.values()) else EXIT_VERIFY


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matrixf5", description="Matrix-F5 Gröbner bases and complexity bounds")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(sp, fmt_default):
        sp.add_argument("--prime", type=int, default=None, help="field characteristic (default 65521)")
        sp.add_argument("--format", choices=("json", "csv", "text"), default=fmt_default)
        sp.add_argument("--out", default=None, help="output file (default stdout)")

    sp = sub.add_parser("gb", help="compute F5 bases of a system file")
    sp.add_argument("system")
    sp.add_argument("--degree-bound", type=int, default=None)
    sp.add_argument("--mode", choices=f5engine.MODES, default="top")
    sp.add_argument("--homogenize", action="store_true")
    sp.add_argument("--dump-macaulay", type=int, default=None, metavar="D",
                    help="also write the degree-D Macaulay matrix as CSV")
    sp.add_argument("--dump-macaulay-path", default=None)
    common(sp, "text")
    sp.set_defaults(func=cmd_gb)

    sp = sub.add_parser("bench", help="run F5 on random dense systems")
    sp.add_argument("--n", required=True, help="e.g. 4:8")
    sp.add_argument("--delta", type=int, default=2)
    sp.add_argument("--mode", choices=("top", "full", "both"), default="top")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--reps", type=int, default=1)
    sp.add_argument("--seeds", default=None, help="explicit seed list, e.g. 0:19")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--force", action="store_true")
    common(sp, "csv")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("bounds", help="evaluate the complexity bounds")
    sp.add_argument("--delta", default="2")
    sp.add_argument("--n", default="10")
    sp.add_argument("--ell", type=int, default=0)
    sp.add_argument("--omega", default="3,strassen,2.376")
    common(sp, "csv")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("gen", help="generate a random dense system")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--delta", type=int, default=2)
    sp.add_argument("--degrees", default=None, help="explicit degree list, e.g. 2,2,3")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--retries", type=int, default=5)
    sp.add_argument("--no-verify", action="store_true")
    common(sp, "text")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="check regularity, Noether position, oracle agreement")
    sp.add_argument("system")
    sp.add_argument("--check", default=None, help=f"comma list from {','.join(CHECKS)}")
    sp.add_argument("--homogenize", action="store_true")
    common(sp, "text")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "prime", None) is not None:
        try:
            PrimeField(args.prime)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except (InputError, SystemFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
