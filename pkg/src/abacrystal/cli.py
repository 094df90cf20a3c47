"""Command line entry point.

Exit codes: 0 when every check passes, 1 when a verification fails, 2 for
usage errors.
"""
from __future__ import annotations

import argparse
import sys

from . import verify
from .abacus import AbacusCrystal, PartitionCrystal, compact_for_weight, sources
from .charformula import parse_weight
from .cpp import CPPCrystal, abacus_to_cpp, zero_cpp
from .crystal import affine_cartan, check_local_axioms, dump_json, explore, to_dot, to_json
from .kyoto import PathCrystal, ground_state_path
from .partitions import merge_rows

PASS, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _weight(args, need_level: bool = True) -> tuple[int, ...]:
    try:
        lam = parse_weight(args.lambda_)
    except ValueError as exc:
        raise UsageError(f"--lambda must be comma-separated integers: {exc}") from None
    if args.n is not None and len(lam) != args.n:
        raise UsageError(f"--lambda has {len(lam)} coefficients but --n is {args.n}")
    if any(m < 0 for m in lam) or sum(lam) < 1:
        raise UsageError("--lambda must be a nonzero dominant weight")
    if need_level and args.l is not None and sum(lam) != args.l:
        raise UsageError(f"--lambda has level {sum(lam)} but --l is {args.l}")
    return lam


def _emit(payload: dict, out: str | None = None) -> None:
    text = dump_json(payload) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- graph -------------------------------------------------------------------


def _model_and_seed(model: str, lam):
    n = len(lam)
    psi0 = compact_for_weight(lam)
    if model == "abacus":
        return AbacusCrystal(n, "descending"), psi0, lambda v: v.render().replace("\n", "\\n")
    if model == "partition":
        row = merge_rows(psi0.rows)
        crystal = PartitionCrystal(n, psi0.ell, row.charge)
        return crystal, row.parts, lambda v: ",".join(map(str, v)) or "()"
    if model == "cpp":
        return CPPCrystal(n), zero_cpp(n, psi0.charges), lambda v: " / ".join(",".join(map(str, r)) for r in v.rows)
    if model == "kyoto":
        return PathCrystal(n), ground_state_path(lam), str
    raise UsageError(f"unknown model {model}")


def _encode(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    return list(v)


def cmd_graph(args) -> int:
    lam = _weight(args)
    if args.deg < 0:
        raise UsageError("--deg must be nonnegative")
    model, seed, label = _model_and_seed(args.model, lam)
    if args.ball == "descending":
        if args.model not in ("abacus", "cpp"):
            raise UsageError("--ball descending needs --model abacus or cpp")
        seed = [(s if args.model == "abacus" else abacus_to_cpp(s), w) for s, w in sources(compact_for_weight(lam), args.deg)]
    g = explore(model, seed, args.deg)
    if args.corrupt:
        if not g.edges:
            raise UsageError("--corrupt needs at least one edge; raise --deg")
        s, i, t = g.edges[0]
        g.edges[0] = (s, (i + 1) % len(lam), t)
    report = check_local_axioms(g, affine_cartan(len(lam)))
    if args.format == "dot":
        text = to_dot(g, label)
    else:
        text = dump_json({"graph": to_json(g, _encode), "axioms": report.to_json()}) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    summary = {"model": args.model, "lambda": list(lam), "deg": args.deg, "vertices": len(g), **report.to_json()}
    print(dump_json(summary), file=sys.stderr)
    return PASS if report.passed else FAIL


# -- verification commands ---------------------------------------------------


def cmd_genfunc(args) -> int:
    lam = _weight(args)
    if args.deg < 0:
        raise UsageError("--deg must be nonnegative")
    if args.action == "compare":
        payload = verify.genfunc_report(lam, args.deg, enumerate_too=not args.no_enumerate)
    else:
        payload = verify.duality_report(lam, args.deg)
    _emit(payload, args.out)
    return PASS if payload["pass"] else FAIL


def cmd_bijection(args) -> int:
    lam = _weight(args)
    if args.weight < 0:
        raise UsageError("--weight must be nonnegative")
    payload = verify.bijection_report(lam, args.weight)
    _emit(payload, args.out)
    return PASS if payload["pass"] else FAIL


def cmd_kyoto(args) -> int:
    lam = _weight(args)
    if args.deg < 0:
        raise UsageError("--deg must be nonnegative")
    payload = verify.kyoto_report(lam, args.deg)
    if len(lam) == 3 and sum(lam) == 2:
        payload["perfect_crystal_golden"] = verify.perfect_crystal_edges(3, 2) == verify.PERFECT_3_2_EDGES
        payload["pass"] = payload["pass"] and payload["perfect_crystal_golden"]
    _emit(payload, args.out)
    return PASS if payload["pass"] else FAIL


def cmd_commutor(args) -> int:
    if args.m < 2:
        raise UsageError("--m must be at least 2")
    if args.max_size < 0:
        raise UsageError("--max-size must be nonnegative")
    cactus = None if args.cactus_size < 0 else args.cactus_size
    payload = verify.commutor_report(args.m, args.max_size, cactus)
    _emit(payload, args.out)
    return PASS if payload["pass"] else FAIL


# -- parser ------------------------------------------------------------------


def _add_weight(p, deg_default=None, deg_name="--deg"):
    p.add_argument("--n", type=int, help="rank parameter of affine sl_n")
    p.add_argument("--l", type=int, help="level")
    p.add_argument("--lambda", dest="lambda_", required=True, help="coefficients m_0,...,m_{n-1}")
    if deg_default is not None:
        p.add_argument(deg_name, type=int, default=deg_default)
    p.add_argument("--out", help="write the result here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abacrystal", description="Abacus, cylindric partition and path crystals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="explore a crystal ball, check local axioms, export it")
    p.add_argument("--model", choices=["abacus", "partition", "cpp", "kyoto"], default="abacus")
    _add_weight(p, 8)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument(
        "--ball",
        choices=["tight", "descending"],
        default="tight",
        help="highest component only, or every descending component (abacus and cpp)",
    )
    p.add_argument("--corrupt", action="store_true", help="recolor one edge before checking (negative control)")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("genfunc", help="compare generating functions")
    p.add_argument("action", choices=["compare", "duality"])
    _add_weight(p, 15)
    p.add_argument("--no-enumerate", action="store_true", help="skip brute-force enumeration")
    p.set_defaults(func=cmd_genfunc)

    p = sub.add_parser("bijection", help="abacus to cylindric partition bijection checks")
    _add_weight(p, 8, "--weight")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("kyoto", help="check the map to the path model")
    _add_weight(p, 8)
    p.set_defaults(func=cmd_kyoto)

    p = sub.add_parser("commutor", help="crystal commutor checks in type A")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--cactus-size", type=int, default=-1, help="total size bound for cactus triples; negative skips")
    p.add_argument("--out")
    p.set_defaults(func=cmd_commutor)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    return USAGE


if __name__ == "__main__":
    sys.exit(main())
