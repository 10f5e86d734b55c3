"""Command-line front end.

Exit codes: 0 success (every checked statement holds), 1 usage error,
2 validation error (bad group description or Cayley table), 3 a theorem
instance came out VIOLATED.

Every flag can also be set through an environment variable named
``PSIK_<FLAG>`` (for example ``PSIK_K_MAX=6`` or ``PSIK_CACHE=psi.jsonl``);
explicit flags win.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time

from .arith import DomainError
from .cache import PsiCache
from .cayley import CayleyTableError, ResourceError
from .groups import GroupSpecError
from .output import FORMATS, render_records
from .psi import psi
from .search import BoundViolation, extremal_over_order, find_reversals, worst_ratio_scan
from .syntax import SpecParseError, parse_spec, render
from .verify import THEOREM_IDS, SuiteConfig, UsageError, run_suite, violations
from .groups import spectrum

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_VIOLATED = 0, 1, 2, 3
ENV_PREFIX = "PSIK_"

log = logging.getLogger("psik")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _env(name: str, default=None, type=str):
    raw = os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"))
    if raw is None:
        return default
    if type is bool:
        return raw.strip().lower() in ("1", "true", "yes", "on")
    return type(raw)


def _common(p: argparse.ArgumentParser, *names: str) -> None:
    if "format" in names:
        p.add_argument("--format", choices=FORMATS, default=_env("format", "table"))
    if "k" in names:
        p.add_argument("--k", type=int, default=_env("k", None, int))
    if "k-max" in names:
        p.add_argument("--k-max", type=int, default=_env("k-max", 8, int))
    if "n" in names:
        p.add_argument("--n", type=int, default=_env("n", None, int))
    if "n-max" in names:
        p.add_argument("--n-max", type=int, default=_env("n-max", None, int))
    if "t-max" in names:
        p.add_argument("--t-max", type=int, default=_env("t-max", 99, int))
    if "workers" in names:
        p.add_argument("--workers", type=int, default=_env("workers", 1, int))
    if "families" in names:
        p.add_argument("--families", default=_env("families", None),
                       help="comma list from cyclic,abelian,dihedral,dicyclic,semidirect")
    if "cache" in names:
        p.add_argument("--cache", default=_env("cache", None), help="append-only JSONL cache file")
        p.add_argument("--verify-cache", action="store_true", default=_env("verify-cache", False, bool))
    if "cayley-check" in names:
        p.add_argument("--cayley-check", choices=("auto", "always", "never"),
                       default=_env("cayley-check", "auto"))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="psik",
        description="Exact sums of k-th powers of element orders of finite groups.",
        epilog="Group syntax: C<n>, D<m> (dihedral of order 2m, so D18 has 36 elements), "
        "Dic<m> (order 4m), A[p:parts;q:parts], SD(p^r,m,a), file:<cayley.json>, joined by '*'.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="psi_k of one group")
    p.add_argument("spec")
    _common(p, "format", "k", "cache", "cayley-check")

    p = sub.add_parser("spectrum", help="order spectrum of one group")
    p.add_argument("spec")
    _common(p, "format", "cayley-check")

    p = sub.add_parser("verify", help="check theorem instances over the built-in families")
    p.add_argument("theorem", help=f"one of: {', '.join(THEOREM_IDS)}, all")
    _common(p, "format", "k", "k-max", "n", "n-max", "t-max", "workers", "families")
    p.add_argument("--semidirect-max", type=int, default=_env("semidirect-max", None, int))
    p.add_argument("--product-max", type=int, default=_env("product-max", 1000, int))
    p.add_argument("--ab-max", type=int, default=_env("ab-max", 6, int))
    p.add_argument("--summary-only", action="store_true",
                   help="print only the pass/fail summary, not every report")

    p = sub.add_parser("search", help="reversal, extremal or worst-ratio scans")
    p.add_argument("mode", choices=("reversal", "extremal", "worst-ratio"))
    _common(p, "format", "k", "k-max", "n", "n-max", "families")
    p.add_argument("--top", type=int, default=_env("top", 10, int))

    p = sub.add_parser("cache", help="inspect or re-verify a psi cache file")
    p.add_argument("action", choices=("stats", "verify"))
    _common(p, "cache")
    return parser


def _emit(records, fmt: str) -> None:
    sys.stdout.write(render_records(records, fmt))


def cmd_compute(args) -> int:
    spec = parse_spec(args.spec, args.cayley_check)
    k = 1 if args.k is None else args.k
    if args.cache:
        cache = PsiCache(args.cache, verify=args.verify_cache)
        value = cache.psi(spec, k)
    else:
        value = psi(spec, k)
    _emit([{
        "group": render(spec), "order": str(spec.order), "k": k,
        "psi_k": str(value.value), "route": value.route,
    }], args.format)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    spec = parse_spec(args.spec, args.cayley_check)
    s = spectrum(spec)
    if args.format == "json":
        _emit([{"group": render(spec), "order": str(s.order),
                "spectrum": [[str(d), str(c)] for d, c in s]}], "json")
    else:
        _emit([{"order": str(d), "count": str(c)} for d, c in s], args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.theorem != "all" and args.theorem not in THEOREM_IDS:
        raise UsageError(f"unknown theorem id {args.theorem!r}; valid ids: {', '.join(THEOREM_IDS)}, all")
    n_max = args.n_max if args.n_max is not None else (args.n if args.n is not None else 500)
    config = SuiteConfig(
        theorems=(args.theorem,), n_max=n_max, n=args.n, k_max=args.k_max, k=args.k,
        t_max=args.t_max, ab_max=args.ab_max, product_max=args.product_max,
        semidirect_max=args.semidirect_max, families=args.families, workers=args.workers,
    )
    start = time.perf_counter()
    reports = run_suite(config)
    bad = violations(reports)
    if not args.summary_only:
        _emit([r.to_dict() for r in reports], args.format)
    elif bad:
        _emit([r.to_dict() for r in bad], args.format)
    print(
        f"{args.theorem}: {len(reports)} reports, {len(bad)} violated "
        f"({time.perf_counter() - start:.1f}s)",
        file=sys.stderr,
    )
    return EXIT_VIOLATED if bad else EXIT_OK


def cmd_search(args) -> int:
    if args.mode == "reversal":
        if args.n is None:
            raise UsageError("search reversal needs --n")
        records = [w.to_dict() for w in find_reversals(args.n, args.k_max, args.families)]
    elif args.mode == "extremal":
        if args.n is None:
            raise UsageError("search extremal needs --n")
        ex = extremal_over_order(args.n, 1 if args.k is None else args.k, args.families)
        records = [ex.to_dict()]
    else:
        n_max = 100 if args.n_max is None else args.n_max
        k = 1 if args.k is None else args.k
        records = [r.to_dict() for r in worst_ratio_scan(n_max, k, args.families, args.top)]
    _emit(records, args.format)
    return EXIT_OK


def cmd_cache(args) -> int:
    if not args.cache:
        raise UsageError("cache commands need --cache PATH (or PSIK_CACHE)")
    cache = PsiCache(args.cache)
    if args.action == "stats":
        _emit([{"path": str(cache.path), "entries": len(cache), "skipped_lines": cache.skipped}], "table")
        return EXIT_OK
    bad = cache.verify_all()
    for key in bad:
        print(f"mismatch: {key}", file=sys.stderr)
    print(f"{len(cache)} entries checked, {len(bad)} mismatched", file=sys.stderr)
    return EXIT_INVALID if bad else EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "search": cmd_search,
    "cache": cmd_cache,
}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DomainError, ValueError) as exc:
        if isinstance(exc, (SpecParseError, GroupSpecError, CayleyTableError)):
            print(f"invalid input: {exc}", file=sys.stderr)
            return EXIT_INVALID
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BoundViolation as exc:
        _emit([exc.report.to_dict()], "json")
        return EXIT_VIOLATED


if __name__ == "__main__":
    sys.exit(main())
