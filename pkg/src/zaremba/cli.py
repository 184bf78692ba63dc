"""Command-line front end.

Every subcommand prints one report to stdout (JSON by default, CSV with
``--format csv``); progress and errors go to stderr.  Exit status is 0 on
success, 2 on usage errors and 1 when the computation itself fails.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from . import __version__, cf, dimension, expsum, formats, orbit, sieve

log = logging.getLogger("zaremba")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _theta(text: str) -> expsum.ArcPoint:
    try:
        return expsum.ArcPoint.parse(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"cannot parse theta {text!r}; use r/s or a decimal")


def _int_list(text: str) -> list[int]:
    try:
        return [int(float(t)) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse integer list {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zaremba", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--threads", type=int, default=orbit.default_threads())
    common.add_argument("--out", help="output path (sieve: bitset file)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    p = add("expand", "continued fraction digits of p/q")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = add("eval", "convergents of a digit string")
    p.add_argument("--digits", type=_int_list, required=True, help='e.g. "1,2,2"')

    for name, help_ in (("sieve", "build Q_A up to N (writes --out)"),
                        ("density", "fraction of [1, N] in Q_A"),
                        ("exceptions", "integers in [1, N] missing from Q_A")):
        p = add(name, help_)
        p.add_argument("--A", type=int, required=True)
        p.add_argument("--N", type=int, required=True)
    sub.choices["sieve"].add_argument("--list", action="store_true", help="include members")

    p = add("witness", "smallest p with p/q in R_A")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--A", type=int, required=True)

    p = add("nieder", "witnesses for base^j, j = 1..max-exp")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--max-exp", type=int, required=True)
    p.add_argument("--A", type=int, required=True)

    p = add("fit", "log-log slope of the orbit count")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--Ns", type=_int_list, required=True, help='e.g. "1e4,1e5,1e6"')

    p = add("dim", "Hausdorff dimension estimate")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--method", choices=("asymptotic", "transfer", "cylinder"), default="transfer")
    p.add_argument("--m", type=int, default=48)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--depth", type=int)

    p = add("expsum", "orbit exponential sum at one frequency")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--theta", type=_theta, required=True)
    p.add_argument("--beta", type=float, default=0.0)

    p = add("profile", "exponential sums over Farey fractions")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--s-max", type=int, required=True)
    return parser


# Each handler returns (json body, csv columns, csv rows).


def _expand(args):
    d = cf.cf_expand(args.p, args.q)
    return {"p": args.p, "q": args.q, "digits": list(d)}, ("p", "q", "digits"), [
        (args.p, args.q, " ".join(map(str, d)))]


def _eval(args):
    pair, seq = cf.cf_eval(args.digits)
    body = {"digits": args.digits, "p": pair.p, "q": pair.q,
            "convergents": [[c.p, c.q] for c in seq]}
    return body, ("j", "p", "q"), [(j, c.p, c.q) for j, c in enumerate(seq, 1)]


def _sieve(args):
    log.info("enumerating orbit A=%d N=%d", args.A, args.N)
    cs = orbit.continuant_bitset(args.A, args.N, args.threads)
    strings = orbit.orbit_count(args.A, args.N, args.threads)
    if args.out:
        formats.write_bitset(args.out, cs)
        log.info("wrote %s", args.out)
    body = {"A": args.A, "N": args.N, "count": cs.popcount(), "strings": strings,
            "out": args.out}
    if args.list:
        body["members"] = cs.members()
    return body, ("A", "N", "count", "strings"), [(args.A, args.N, body["count"], strings)]


def _density(args):
    log.info("enumerating orbit A=%d N=%d", args.A, args.N)
    rep = sieve.exception_report(args.A, args.N, args.threads).to_dict()
    body = {k: rep[k] for k in ("A", "N", "count", "density", "density_exact")}
    return body, tuple(body), [tuple(body.values())]


def _exceptions(args):
    log.info("enumerating orbit A=%d N=%d", args.A, args.N)
    body = sieve.exception_report(args.A, args.N, args.threads).to_dict()
    return body, ("A", "N", "q"), [(args.A, args.N, q) for q in body["exceptions"]]


def _witness(args):
    w = sieve.witness(args.q, args.A)
    p, d = (None, None) if w is None else (w[0], list(w[1]))
    body = {"q": args.q, "A": args.A, "p": p, "digits": d}
    return body, ("q", "A", "p", "digits"), [
        (args.q, args.A, p, None if d is None else " ".join(map(str, d)))]


def _nieder(args):
    body = sieve.niederreiter_check(args.base, args.max_exp, args.A).to_dict()
    rows = [(r["exponent"], r["q"], r["p"],
             None if r["digits"] is None else " ".join(map(str, r["digits"])))
            for r in body["rows"]]
    return body, ("exponent", "q", "p", "digits"), rows


def _fit(args):
    fit = sieve.counting_fit(args.A, args.Ns, args.threads)
    body = fit.to_dict()
    rows = [(args.A, n, c, fit.slope, fit.reference) for n, c in zip(fit.Ns, fit.counts)]
    return body, ("A", "N", "count", "slope", "reference"), rows


def _dim(args):
    if args.method == "asymptotic":
        est = dimension.DimensionEstimate(args.A, "asymptotic", dimension.delta_asymptotic(args.A))
    elif args.method == "transfer":
        est = dimension.delta_transfer(args.A, args.m, args.tol)
    else:
        est = dimension.delta_cylinder(args.A, args.depth)
    body = est.to_dict()
    return body, ("A", "method", "value"), [(est.A, est.method, est.value)]


def _expsum(args):
    point = args.theta
    if args.beta:
        point = (expsum.ArcPoint.rational(point.r, point.s, args.beta) if point.tagged
                 else expsum.ArcPoint(point.theta + args.beta))
    val = expsum.exp_sum(args.A, args.N, point, args.threads)
    body = val.to_dict()
    body.update({"r": point.r, "s": point.s, "beta": point.beta})
    cols = ("A", "N", "theta", "re", "im", "abs", "count")
    return body, cols, [tuple(body[c] for c in cols)]


def _profile(args):
    rows = expsum.arc_profile(args.A, args.N, args.s_max, args.threads)
    body = {"A": args.A, "N": args.N, "s_max": args.s_max,
            "rows": [r.to_dict() for r in rows]}
    return body, expsum.COLUMNS, [tuple(getattr(r, c) for c in expsum.COLUMNS) for r in rows]


HANDLERS = {
    "expand": _expand, "eval": _eval, "sieve": _sieve, "density": _density,
    "exceptions": _exceptions, "witness": _witness, "nieder": _nieder, "fit": _fit,
    "dim": _dim, "expsum": _expsum, "profile": _profile,
}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(str(exc))
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    if args.threads < 1:
        stderr.write("zaremba: error: --threads must be >= 1\n")
        return 2

    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO)
    start = time.perf_counter()
    try:
        body, columns, rows = HANDLERS[args.command](args)
    except (ValueError, ArithmeticError, MemoryError, RuntimeError) as exc:
        stderr.write(f"zaremba: error: {exc}\n")
        return 1
    finally:
        log.removeHandler(handler)
    meta = {
        "command": args.command,
        "A": getattr(args, "A", None),
        "N": getattr(args, "N", None),
        "version": __version__,
        "threads": args.threads,
        "wall_time": round(time.perf_counter() - start, 6),
    }
    if args.format == "json":
        stdout.write(formats.to_json({**body, "meta": meta}) + "\n")
    else:
        stdout.write(formats.to_csv(columns, rows, meta))
    return 0


if __name__ == "__main__":
    sys.exit(main())
