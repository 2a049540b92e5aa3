"""Command-line interface: ``mnqt [global flags] VERB [options]``."""
import argparse
import json
import sys

from . import greenkostka as gk
from . import macdonald as mac
from . import mn
from . import pieri
from .exact import RatFunc
from .partitions import Partition
from .symfunc import DegreeOverflow, set_truncation_degree, truncation_degree
from .verify import SUITES, run_suite, spot_checks

FORMATS = ("json", "text", "latex")
BASES = ("P", "Q", "J", "HL-P", "HL-Q", "schur-Q", "s")
MN_VARIANTS = ("primal", "dual", "skew", "tilde", "hecke", "hecke-clifford")


class Report:
    """A JSON document plus labelled coefficients for the text and LaTeX views."""

    def __init__(self, title, doc, entries):
        self.title = title
        self.doc = doc
        self.entries = entries  # list of (label, RatFunc or str)

    def render(self, fmt):
        if fmt == "json":
            return json.dumps(self.doc, indent=2, ensure_ascii=False)
        if fmt == "text":
            lines = [self.title]
            lines += ["  %s: %s" % (label, value) for label, value in self.entries]
            return "\n".join(lines)
        rows = []
        for label, value in self.entries:
            body = value.latex() if isinstance(value, RatFunc) else "\\text{%s}" % value
            rows.append("%s &= %s" % (label, body))
        return "%% %s\n\\begin{align*}\n%s\n\\end{align*}" % (
            self.title, " \\\\\n".join(rows))


def partition_arg(text):
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a positive integer, got %r" % text) from None
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got %r" % text)
    return value


def nonnegative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer >= 0, got %r" % text) from None
    if value < 0:
        raise argparse.ArgumentTypeError("expected an integer >= 0, got %r" % text)
    return value


def perturb_arg(text):
    if "/" not in text:
        raise argparse.ArgumentTypeError("expected LAMBDA/MU, got %r" % text)
    left, right = text.split("/", 1)
    return partition_arg(left), partition_arg(right)


def _tex(lam):
    return "(%s)" % (str(lam) if lam else "")


# -- verbs -----------------------------------------------------------------------

def cmd_expand(args):
    if args.size > truncation_degree():
        raise DegreeOverflow("size %d exceeds truncation degree %d"
                             % (args.size, truncation_degree()))
    doc = mac.table_json(args.size, args.basis)
    entries = []
    for lam, obj in doc["entries"].items():
        for term in obj["terms"]:
            mu = Partition(term["partition"])
            entries.append(("%s_{%s}[m_{%s}]" % (args.basis, _tex(lam), _tex(mu)),
                            RatFunc(term["coeff"])))
    title = "%s basis in degree %d, monomial coefficients" % (args.basis, args.size)
    return Report(title, doc, entries)


def cmd_mn(args):
    v, threads = args.variant, args.threads
    if v == "dual":
        if args.lam is None:
            raise UsageError("--lambda is required for the dual variant")
        exp = mn.mn_dual(args.lam, args.k, args.alphabet, threads)
    else:
        if args.mu is None:
            raise UsageError("--mu is required for the %s variant" % v)
        if v == "primal":
            exp = mn.mn_expand(args.mu, args.k, args.alphabet, threads)
        elif v == "skew":
            exp = mn.mn_skew_expand(args.mu, args.rho or Partition(()), args.k,
                                    args.alphabet, threads)
        elif v == "tilde":
            exp = mn.mn_tilde(args.mu, args.k, threads)
        else:
            fn = mn.hecke_mn if v == "hecke" else mn.hecke_clifford_mn
            terms = fn(args.mu, args.k)
            doc = {"mu": str(args.mu), "k": args.k, "variant": v,
                   "terms": [{"lambda": str(lam), "coeff": str(c)} for lam, c in terms]}
            entries = [("c_{%s}" % _tex(lam), c) for lam, c in terms]
            return Report("%s weights above %s, r = %d" % (v, args.mu, args.k), doc, entries)
    doc = exp.to_json_obj()
    doc["variant"] = v
    entries = [("c_{%s}" % _tex(lam), c) for lam, c in exp.terms]
    title = "%s expansion: k = %d, alphabet %s, basis %s" % (v, args.k, exp.alphabet, exp.basis)
    return Report(title, doc, entries)


def _table_report(kind, args, single, table):
    if args.lam is not None or args.mu is not None:
        if args.lam is None or args.mu is None:
            raise UsageError("--lambda and --mu must be given together")
        value = single(args.lam, args.mu)
        doc = {"kind": kind, "method": args.method, "lambda": str(args.lam),
               "mu": str(args.mu), "value": str(value)}
        label = "%s_{%s,%s}" % (kind[0].upper(), _tex(args.lam), _tex(args.mu))
        return Report("%s entry (%s)" % (kind, args.method), doc, [(label, value)])
    if args.size is None:
        raise UsageError("give --size, or --lambda and --mu")
    if args.size > truncation_degree():
        raise DegreeOverflow("size %d exceeds truncation degree %d"
                             % (args.size, truncation_degree()))
    t = table(args.size, args.method, args.threads)
    parts = t.partitions()
    entries = [("%s_{%s,%s}" % (kind[0].upper(), _tex(r), _tex(c)), t.entries[(r, c)])
               for r in parts for c in parts]
    return Report("%s table, n = %d (%s)" % (kind, args.size, args.method),
                  t.to_json_obj(), entries)


def cmd_kostka(args):
    return _table_report("kostka", args, gk.KOSTKA_FUNCTIONS[args.method], gk.kostka_table)


def cmd_green(args):
    return _table_report("green", args, gk.GREEN_FUNCTIONS[args.method], gk.green_table)


def cmd_invert_pieri(args):
    lam = args.lam
    if args.t0:
        exp = pieri.schur_inverse(lam)
    elif args.tm1:
        if not lam.is_strict():
            raise UsageError("--tm1 needs a strict partition, got %s" % (lam,))
        exp = pieri.schurQ_inverse(lam)
    else:
        exp = pieri.hl_inverse_pieri(lam)
    doc = exp.to_json_obj()
    if args.check:
        doc["reconstructs"] = pieri.verify_inversion(exp)
    entries = [("c_{%d,%s}" % (lam.part(1) + k, _tex(mu)), c) for k, mu, c in exp.terms]
    return Report("inverse Pieri (%s) for %s: coefficient of row(r) Q_mu"
                  % (exp.kind, lam), doc, entries)


def cmd_verify(args):
    checks = run_suite(args.suite, threads=args.threads, perturb=args.perturb)
    if args.spot:
        checks.append(spot_checks(args.spot, args.seed, args.threads))
    passed = sum(c.passed for c in checks)
    doc = {"suite": args.suite, "degree": truncation_degree(),
           "checks": [{"identity": c.label, "bound": c.bound, "cases": c.count,
                       "passed": c.passed, "failures": c.failures} for c in checks],
           "summary": {"passed": passed, "failed": len(checks) - passed}}
    entries = [("check %d" % (i + 1), c.line()) for i, c in enumerate(checks)]
    report = Report("verify %s: %d of %d checks passed" % (args.suite, passed, len(checks)),
                    doc, entries)
    report.exit_code = 0 if passed == len(checks) else 1
    if args.format == "text":
        # the plain report is one PASS/FAIL line per identity
        report.entries = []
        report.title = "\n".join([c.line() for c in checks]
                                 + ["%s: %d passed, %d failed" % (
                                     args.suite, passed, len(checks) - passed)])
    return report


class UsageError(Exception):
    pass


# -- parser ------------------------------------------------------------------------

def _global_flags(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--degree", type=positive_int, default=d(None),
                        help="truncation degree N (default: MNQT_DEGREE or 8)")
    parser.add_argument("--format", choices=FORMATS, default=d("json"))
    parser.add_argument("--threads", type=positive_int, default=d(1))
    parser.add_argument("--seed", type=int, default=d(0),
                        help="seed for randomized spot checks")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mnqt", description="Exact Macdonald Murnaghan-Nakayama engine.")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("expand", parents=[common], help="basis tables in monomials")
    p.add_argument("--basis", choices=BASES, default="P")
    p.add_argument("--size", type=positive_int, required=True)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("mn", parents=[common], help="Murnaghan-Nakayama expansions")
    p.add_argument("--variant", choices=MN_VARIANTS, default="primal")
    p.add_argument("--mu", type=partition_arg)
    p.add_argument("--lambda", dest="lam", type=partition_arg)
    p.add_argument("--rho", type=partition_arg)
    p.add_argument("--k", type=nonnegative_int, required=True)
    p.add_argument("--alphabet", default="a-1")
    p.set_defaults(func=cmd_mn)

    for verb, methods, fn in (("kostka", gk.KOSTKA_METHODS, cmd_kostka),
                              ("green", gk.GREEN_METHODS, cmd_green)):
        p = sub.add_parser(verb, parents=[common], help="%s polynomials" % verb)
        p.add_argument("--size", type=positive_int)
        p.add_argument("--method", choices=methods, default="direct")
        p.add_argument("--lambda", dest="lam", type=partition_arg)
        p.add_argument("--mu", type=partition_arg)
        p.set_defaults(func=fn)

    p = sub.add_parser("invert-pieri", parents=[common], help="inverse Pieri expansion")
    p.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--t0", action="store_true", help="Schur case (t = 0)")
    g.add_argument("--tm1", action="store_true", help="Schur Q case (t = -1)")
    p.add_argument("--check", action="store_true", help="also verify the reconstruction")
    p.set_defaults(func=cmd_invert_pieri)

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("suite", choices=tuple(SUITES) + ("all",))
    p.add_argument("--perturb", type=perturb_arg, metavar="LAMBDA/MU",
                   help="add 1 to one direct Kostka entry (fault injection)")
    p.add_argument("--spot", type=nonnegative_int, default=0,
                   help="number of random spot checks drawn with --seed")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    set_truncation_degree(args.degree)
    try:
        report = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (DegreeOverflow, ValueError) as exc:
        print("mnqt: error: %s" % exc, file=sys.stderr)
        return 2
    finally:
        set_truncation_degree(None)
    print(report.render(args.format))
    return getattr(report, "exit_code", 0)


if __name__ == "__main__":
    sys.exit(main())
