"""Command-line entry point.

Exit codes: 0 verified good, 1 bad or indeterminate (or a failed check),
2 usage error, 3 budget exhausted, 4 bad prime.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .algebra.fields import PrimeField, is_prime, parse_field
from .algebra.orders import MonomialOrder
from .algebra.polynomial import PolyRing, format_polynomial
from .casas import report as reports
from .casas.branch import BranchSpec, branch_ideal, branch_order
from .casas.hasse import HasseDerivative
from .casas.oracle import oracle_cap_from_env
from .casas.verify import (
    BAD, BAD_PRIME, BUDGET_EXHAUSTED, GOOD, INDETERMINATE, check_finiteness, first_good,
    good_prime_sweep, pure_powers_over_Q, verify_branch,
)
from .errors import BudgetExhausted, OracleMismatchError, UsageError
from .groebner import Budget, field_equations, groebner

EXIT_OK, EXIT_BAD, EXIT_USAGE, EXIT_BUDGET, EXIT_BAD_PRIME = 0, 1, 2, 3, 4

VERDICT_EXIT = {GOOD: EXIT_OK, BAD: EXIT_BAD, INDETERMINATE: EXIT_BAD,
                BUDGET_EXHAUSTED: EXIT_BUDGET, BAD_PRIME: EXIT_BAD_PRIME}

_BOOL_FLAGS = {"oracle", "timing", "verbose"}

log = logging.getLogger("casas_alvero")


def _positive_int(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _degree(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"degree must be >= 1, got {v}")
    return v


def _prime(text: str) -> int:
    v = int(text)
    if not is_prime(v):
        raise argparse.ArgumentTypeError(f"{v} is not prime")
    return v


def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    p.add_argument("--max-pairs", type=_positive_int, help="S-pair budget (env CA_BUDGET_PAIRS)")
    p.add_argument("--max-degree", type=_positive_int, help="intermediate degree budget (env CA_BUDGET_DEGREE)")
    p.add_argument("--oracle-cap", type=_positive_int, help="max p^n points for the oracle (env CA_ORACLE_CAP)")
    p.add_argument("--enum-cap", type=_positive_int, default=100_000,
                   help="max standard monomials to list")
    p.add_argument("--jobs", type=_positive_int, help="parallel workers for sweeps")
    p.add_argument("--timing", action="store_true", help="record elapsed_ms (output no longer reproducible)")
    p.add_argument("--verbose", "-v", action="store_true")


def _branch_args(p: argparse.ArgumentParser):
    p.add_argument("--n", type=_degree, required=True, help="degree of f")
    p.add_argument("--branch", default="special", help="'special' or comma-separated indices i_1,...,i_{n-1}")
    p.add_argument("--order", help="override the branch order: lex|grlex[:i,j,...] (1-based, highest first)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="casas-alvero", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="key = value file mirroring the long flags; flags win")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="reduced Groebner basis of a branch ideal")
    _branch_args(p)
    p.add_argument("--field", default="q", help="q or fp:<prime>; over F_p the field equations are added")
    p.add_argument("--no-field-equations", action="store_true")
    _common(p)

    p = sub.add_parser("verify", help="count standard monomials over F_p and classify p")
    _branch_args(p)
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check with an exhaustive scan")
    _common(p)

    p = sub.add_parser("sweep", help="verify over every prime in a range")
    _branch_args(p)
    p.add_argument("--pmin", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--oracle", action="store_true")
    _common(p)

    p = sub.add_parser("hasse", help="print H_i(f)(x_k)")
    p.add_argument("--n", type=_degree, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--field", default="q")
    _common(p)

    p = sub.add_parser("powers", help="minimal pure powers over Q and the finiteness check")
    _branch_args(p)
    _common(p)

    p = sub.add_parser("props", help="randomised Groebner-engine property checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=_positive_int, default=50)
    p.add_argument("--counting-trials", type=int, default=20)
    _common(p)
    return parser


def load_config(path: str) -> dict[str, str]:
    cfg = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        cfg[key.strip().lstrip("-").replace("-", "_")] = value.strip()
    return cfg


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    cfg = load_config(known.config)
    subparsers = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    for sp in subparsers.choices.values():
        dests = {a.dest for a in sp._actions}
        values = {}
        for k, v in cfg.items():
            if k not in dests:
                continue
            if k in _BOOL_FLAGS or k == "no_field_equations":
                values[k] = v.lower() in ("1", "true", "yes", "on")
            else:
                values[k] = v
        sp.set_defaults(**values)
        # config may satisfy required flags
        for a in sp._actions:
            if a.dest in values:
                a.required = False


def _budget(args) -> Budget:
    return Budget.from_env(max_pairs=args.max_pairs, max_degree=args.max_degree)


def _oracle_cap(args) -> int:
    return args.oracle_cap if args.oracle_cap is not None else oracle_cap_from_env()


def _spec(args) -> BranchSpec:
    try:
        return BranchSpec.parse(args.n, args.branch)
    except UsageError as exc:
        raise UsageError(f"--branch: {exc}") from None


def _order(args, spec: BranchSpec) -> MonomialOrder:
    if not args.order:
        return branch_order(spec)
    try:
        return MonomialOrder.parse(args.order, spec.n)
    except UsageError as exc:
        raise UsageError(f"--order: {exc}") from None


def _field(args):
    try:
        return parse_field(args.field)
    except UsageError as exc:
        raise UsageError(f"--field: {exc}") from None


def cmd_gb(args, out) -> int:
    spec = _spec(args)
    field = _field(args)
    order = _order(args, spec)
    ring = PolyRing.roots(spec.n, field)
    gens = branch_ideal(spec, field)
    if isinstance(field, PrimeField) and not args.no_field_equations:
        gens = gens + field_equations(ring)
    if not gens:
        out(order.header() + "\n0\n" if args.format == "text" else json.dumps(
            {"order": order.header(), "generators": []}) + "\n")
        return EXIT_OK
    try:
        G = groebner(gens, order, _budget(args))
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.format == "json":
        out(json.dumps({"order": order.header(),
                        "generators": [format_polynomial(g) for g in G.generators]}) + "\n")
    else:
        out(G.export())
    return EXIT_OK


def _emit_reports(args, out, rs) -> None:
    if args.format == "json":
        out(reports.to_json_lines(rs, args.timing))
    elif args.format == "csv":
        out(reports.to_csv(rs, args.timing))
    else:
        out(reports.to_text(rs, args.timing))


def cmd_verify(args, out) -> int:
    spec = _spec(args)
    try:
        r = verify_branch(spec, args.p, args.oracle, _budget(args), _oracle_cap(args), _order(args, spec))
    except OracleMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD
    _emit_reports(args, out, [r])
    return VERDICT_EXIT[r.verdict]


def cmd_sweep(args, out) -> int:
    spec = _spec(args)
    if args.pmin > args.pmax:
        raise UsageError(f"--pmin {args.pmin} exceeds --pmax {args.pmax}")
    try:
        rs = good_prime_sweep(spec, args.pmin, args.pmax, args.oracle, _budget(args),
                              _oracle_cap(args), args.jobs)
    except OracleMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD
    _emit_reports(args, out, rs)
    good = [r.p for r in rs if r.verdict == GOOD]
    if args.format == "text":
        out(f"good primes: {','.join(map(str, good)) or 'none'}; first good: {first_good(rs)}\n")
    if good:
        return EXIT_OK
    if all(r.verdict == BUDGET_EXHAUSTED for r in rs):
        return EXIT_BUDGET
    return EXIT_BAD


def cmd_hasse(args, out) -> int:
    field = _field(args)
    if not 1 <= args.i <= args.n - 1:
        raise UsageError(f"--i: derivative order {args.i} outside 1..{args.n - 1}")
    if not 1 <= args.k <= args.n:
        raise UsageError(f"--k: root index {args.k} outside 1..{args.n}")
    h = HasseDerivative.build(args.n, args.i, args.k, field, check=True)
    text = format_polynomial(h.polynomial)
    if args.format == "json":
        out(json.dumps({"n": args.n, "i": args.i, "k": args.k, "polynomial": text}) + "\n")
    else:
        out(text + "\n")
    return EXIT_OK


def cmd_powers(args, out) -> int:
    spec = _spec(args)
    try:
        pp = pure_powers_over_Q(spec, _budget(args))
        finite = check_finiteness(spec, _budget(args))
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    order = branch_order(spec).describe(PolyRing.roots(spec.n).names)
    if args.format == "json":
        out(json.dumps({"n": spec.n, "branch": spec.label, "order": order,
                        "pure_powers": pp, "finite": finite}) + "\n")
    else:
        out(f"n={spec.n} branch={spec.label or '-'} order={order} "
            f"pure_powers={';'.join(f'{k}={v}' for k, v in pp.items()) or '-'} finite={finite}\n")
    return EXIT_OK if finite else EXIT_BAD


def cmd_props(args, out) -> int:
    from .algebra.fields import GF, QQ
    from .selfcheck import run_properties
    res = run_properties(args.seed, args.trials, (QQ, GF(5)), counting_trials=args.counting_trials,
                         budget=_budget(args))
    for f in res.failures:
        out(f"FAIL {f}\n")
    out(f"{res.trials} trials, {len(res.failures)} failures (seed {args.seed})\n")
    return EXIT_OK if res.ok else EXIT_BAD


COMMANDS = {"gb": cmd_gb, "verify": cmd_verify, "sweep": cmd_sweep, "hasse": cmd_hasse,
            "powers": cmd_powers, "props": cmd_props}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        _apply_config(parser, argv)
    except (OSError, UsageError) as exc:
        print(f"error: --config: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")

    chunks: list[str] = []
    try:
        code = COMMANDS[args.command](args, chunks.append)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = "".join(chunks)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
