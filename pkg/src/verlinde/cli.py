"""Command-line front end.

Exit status: 0 on success, 1 if ``verify`` finds a level that fails, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import laurent, rep_ring
from .finite_sector import FiniteAbelianGroup, kgg_ring
from .fusion import build_fusion_ring, s_matrix
from .induction import induce
from .theorem import summarize, verify_range
from .twisted_k import twisted_k_theory

# above this rank the finite-group text output omits the product table
_FINITE_TABLE_MAX_RANK = 64


def _int_at_least(lo: int):
    def parse(s: str) -> int:
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {s!r}")
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v

    parse.__name__ = f"int>={lo}"
    return parse


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def cmd_fusion(args) -> int:
    ring = build_fusion_ring(args.level)
    if args.format == "json":
        _emit(ring.to_json())
    else:
        print(ring.to_text())
    return 0


def cmd_twisted_k(args) -> int:
    q = twisted_k_theory(args.twist)
    if args.format == "json":
        _emit(q.to_json())
        return 0
    print(f"twist m={q.m} (level k={q.level})")
    print(f"K1 rank: {q.k1_rank}")
    print(f"K0 = R(SU2)/<{rep_ring.to_text(q.relation)}>, rank {q.rank}, degree {q.degree} ({q.parity})")
    if not q.rank:
        print("zero ring")
        return 0
    print("basis: " + " ".join(f"X{n}" for n in q.basis))
    N = q.structure_constants
    for a in q.basis:
        for b in range(a, q.rank):
            rhs = rep_ring.RepRingElem({c: int(N[a, b, c]) for c in q.basis})
            print(f"X{a}·X{b} = {rep_ring.to_text(rhs)}")
    return 0


def cmd_verify(args) -> int:
    reports = verify_range(args.max_level, workers=args.workers)
    if args.format == "json":
        _emit([r.to_json() for r in reports])
    else:
        print(summarize(reports))
    return 0 if all(r.verdict for r in reports) else 1


def cmd_induce(args) -> int:
    p = laurent.LaurentPoly((e, 1) for e in args.exponents)
    x = induce(p)
    if args.format == "json":
        _emit(rep_ring.to_json(x))
    else:
        print(rep_ring.to_text(x))
    return 0


def cmd_smatrix(args) -> int:
    S = s_matrix(args.level).entries
    # +0.0 folds -0.0 from sin(pi * integer) into 0.0
    rows = [[round(float(x), 12) + 0.0 for x in row] for row in S]
    if args.format == "json":
        _emit({"k": args.level, "S": rows})
    else:
        for row in rows:
            print(" ".join(f"{x:.12f}" for x in row))
    return 0


def cmd_finite(args) -> int:
    G = FiniteAbelianGroup(tuple(args.cyclic))
    R = kgg_ring(G)
    if args.format == "json":
        _emit(R.to_json())
        return 0
    name = " x ".join(f"Z/{n}" for n in G.cyclic_orders)
    print(f"G = {name}, |G| = {G.order}, rank {R.rank}")
    print("basis: (g, phi) -> index g*|G| + phi, unit at index 0")
    if R.rank <= _FINITE_TABLE_MAX_RANK:
        width = len(str(R.rank - 1))
        for row in R.product:
            print(" ".join(f"{int(x):>{width}}" for x in row))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verlinde",
        description="Verlinde algebra of SU(2) and twisted equivariant K-theory.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    # lets --format also follow the subcommand without clobbering the global value
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fusion", parents=[fmt], help="fusion table of V_k(SU2)")
    p.add_argument("--level", type=_int_at_least(0), required=True)
    p.set_defaults(func=cmd_fusion)

    p = sub.add_parser("twisted-k", parents=[fmt], help="twisted K-theory at twist m")
    p.add_argument("--twist", type=_int_at_least(1), required=True)
    p.set_defaults(func=cmd_twisted_k)

    p = sub.add_parser("verify", parents=[fmt], help="compare both rings for k = 0..max-level")
    p.add_argument("--max-level", type=_int_at_least(0), required=True)
    p.add_argument("--workers", type=_int_at_least(1), default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("induce", parents=[fmt], help="holomorphic induction of a sum of a^n")
    p.add_argument("exponents", type=int, nargs="+", metavar="N")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("smatrix", parents=[fmt], help="modular S-matrix at level k")
    p.add_argument("--level", type=_int_at_least(0), required=True)
    p.set_defaults(func=cmd_smatrix)

    p = sub.add_parser("finite", parents=[fmt], help="K_G(G) for G a product of cyclic groups")
    p.add_argument("--cyclic", type=_int_at_least(2), action="append", required=True, metavar="N")
    p.set_defaults(func=cmd_finite)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)
