"""satake-gl2 command line: ``verify <suite>`` sweeps and ``compute <command>`` lookups.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

import argparse
import csv
import io
import json
import os
import sys
import time

from . import coherent, convolution, orbits
from .exact import matrix_to_json, poly_to_json
from .modules import annihilator_polynomial, hom_formula, standard_module
from .rep import CoweightPair, character_of_pair
from .suites import SUITES, SweepConfig, run_suite

OUTPUT_DIR_ENV = "SATAKE_GL2_OUTPUT_DIR"
CSV_COLUMNS = ("suite", "case_id", "inputs", "expected", "computed", "pass")


class UsageError(Exception):
    pass


def _dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def report_text(report, fmt):
    if fmt == "json":
        return json.dumps(report.to_json(), sort_keys=True, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in report.records:
        w.writerow([report.suite, r["case_id"], _dumps(r["inputs"]), _dumps(r["expected"]),
                    _dumps(r["computed"]), "true" if r["pass"] else "false"])
    return buf.getvalue()


def _primes(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError("primes must be a comma-separated list of integers")


def _pair(lam, mu):
    try:
        return CoweightPair(lam, mu)
    except ValueError as exc:
        raise UsageError(str(exc))


# -- compute ---------------------------------------------------------------

def compute_hom(args):
    h = hom_formula(_pair(*args.source), _pair(*args.target), args.bound)
    return {
        "is_zero": h.is_zero,
        "k": h.k,
        "generator_degree": h.generator_degree,
        "annihilator": poly_to_json(h.annihilator),
        "hilbert_series": [[d, v] for (d,), v in sorted(h.hilbert_series.items())],
    }


def compute_module(args):
    pair = _pair(args.lam, args.mu)
    M = standard_module(pair)
    return {
        "basis_degrees": list(M.basis_degrees),
        "c_matrix": matrix_to_json(M.c_matrix),
        "annihilator": poly_to_json(annihilator_polynomial(pair)),
    }


def compute_orbit(args):
    if args.k is not None:
        if args.coweight is None:
            raise UsageError("--k needs --coweight N1 N2")
        label = orbits.iota(args.k, orbits.DominantGL2Coweight(*args.coweight))
        m, l = label.m, label.l
    elif args.m is not None and args.l is not None:
        m, l = args.m, args.l
    else:
        raise UsageError("give --m and --l, or --k and --coweight")
    o = orbits.orbit(m, l)
    return {"m": o.label.m, "l": o.label.l, "dim": o.dim, "stabilizer_level": o.stabilizer_level}


def compute_stalk(args):
    if args.k < 1:
        raise UsageError("k must be positive")
    return convolution.classify_stalk(args.k, tuple(args.coweight), args.m, args.l).to_json()


def compute_s_set(args):
    return {"set": orbits.s_set(_pair(args.lam, args.mu))}


def compute_invariants(args):
    if args.N is not None:
        if args.N < 1:
            raise UsageError("N must be positive")
        table = coherent.invariants_of_Z_quotient(args.N, args.dmax)
        return {"N": args.N, "dims": [[d, v] for d, v in sorted(table.items())],
                "total": sum(table.values())}
    dim, basis = coherent.gl2_invariants_bidegree(args.d1, args.d2)
    return {"d1": args.d1, "d2": args.d2, "dim": dim,
            "basis": [[[list(e), c.numerator, c.denominator] for e, c in b.items()]
                      for b in basis]}


def compute_character(args):
    _pair(args.lam, args.mu)
    ch = character_of_pair(args.lam, args.mu)
    return {"terms": [[h, z, c] for (h, z), c in sorted(ch.items())]}


def _build_parser():
    ap = argparse.ArgumentParser(prog="satake-gl2", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="mode", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite")
    v.add_argument("--lam-max", type=int)
    v.add_argument("--mu-bound", type=int)
    v.add_argument("--max-degree", type=int, default=20)
    v.add_argument("--k-max", type=int)
    v.add_argument("--primes", type=_primes, default=(3, 5, 7))
    v.add_argument("--out")
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timing", action="store_true",
                   help="record wall-clock duration in the report (breaks byte-identity)")

    c = sub.add_parser("compute", help="emit one object as JSON")
    csub = c.add_subparsers(dest="command", required=True)
    h = csub.add_parser("hom")
    h.add_argument("--source", type=int, nargs=2, required=True, metavar=("LAM", "MU"))
    h.add_argument("--target", type=int, nargs=2, required=True, metavar=("LAM", "MU"))
    h.add_argument("--bound", type=int)
    h.set_defaults(fn=compute_hom)
    for name, fn in (("module", compute_module), ("s-set", compute_s_set),
                     ("character", compute_character)):
        p = csub.add_parser(name)
        p.add_argument("--lam", type=int, required=True)
        p.add_argument("--mu", type=int, required=True)
        p.set_defaults(fn=fn)
    o = csub.add_parser("orbit")
    o.add_argument("--m", type=int)
    o.add_argument("--l", type=int)
    o.add_argument("--k", type=int)
    o.add_argument("--coweight", type=int, nargs=2, metavar=("N1", "N2"))
    o.set_defaults(fn=compute_orbit)
    s = csub.add_parser("stalk")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--coweight", type=int, nargs=2, required=True, metavar=("N1", "N2"))
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.set_defaults(fn=compute_stalk)
    i = csub.add_parser("invariants")
    i.add_argument("--d1", type=int, default=0)
    i.add_argument("--d2", type=int, default=0)
    i.add_argument("--N", type=int)
    i.add_argument("--dmax", type=int, default=8)
    i.set_defaults(fn=compute_invariants)
    return ap


def _verify(args):
    if args.suite not in SUITES:
        print("unknown suite %r; choose from %s" % (args.suite, ", ".join(SUITES)), file=sys.stderr)
        return 2
    try:
        config = SweepConfig(args.lam_max, args.mu_bound, args.max_degree, args.k_max,
                             args.primes, args.format, args.out, args.jobs)
    except ValueError as exc:
        print("bad config: %s" % exc, file=sys.stderr)
        return 2
    path = args.out or os.path.join(os.environ.get(OUTPUT_DIR_ENV, "."),
                                    "%s.%s" % (args.suite, args.format))
    t0 = time.perf_counter()
    report = run_suite(args.suite, config)
    elapsed = time.perf_counter() - t0
    if args.timing:
        report.duration_seconds = round(elapsed, 3)
    try:
        with open(path, "w") as fh:
            fh.write(report_text(report, args.format))
    except OSError as exc:
        print("cannot write report: %s" % exc, file=sys.stderr)
        return 2
    s = report.summary
    print("%s: %d cases, %d passed, %d failed (%.1fs) -> %s"
          % (args.suite, s["cases"], s["passed"], s["failed"], elapsed, path), file=sys.stderr)
    return 0 if report.ok else 1


def main(argv=None):
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.mode == "verify":
        return _verify(args)
    try:
        doc = args.fn(args)
    except (UsageError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    print(_dumps(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
