"""Command-line driver: runs verification suites and prints JSON reports.

The report goes to stdout, a one-screen summary to stderr.  Exit status is 0
when every check passes, 1 when any fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, network, suites
from .hyperdiamond import verify_vacuum
from .report import SuiteReport, dumps, merge
from .symmetry import verify_s4
from .toy import POTENTIALS, ToyConfig, verify_toy

SEED_ENV = "QND_SEED"


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return suites.DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qnd", description="Exact verification suites for quantum network dynamics.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def seeded(sp):
        sp.add_argument("--seed", type=int, default=None,
                        help=f"random seed (default: ${SEED_ENV} or {suites.DEFAULT_SEED})")
        return sp

    v = seeded(sub.add_parser("verify", help="operator-level suites"))
    v.add_argument("suite", choices=sorted(suites.SUITES))

    inv = seeded(sub.add_parser("invariants", help="chronon-number and path invariants of a net"))
    inv.add_argument("--net", required=True, help='JSON file {"num_nodes": N, "arrows": [[tail, head], ...]}')
    inv.add_argument("--n", type=int, default=2, help="highest path order")
    inv.add_argument("--exhaustive", action="store_true", help="also sweep every small net")

    toy = seeded(sub.add_parser("toy", help="local vs remote toy amplitude"))
    toy.add_argument("--dim", type=int, default=8)
    toy.add_argument("--steps", type=int, default=4)
    toy.add_argument("--potential", choices=POTENTIALS[:2], default="harmonic")
    toy.add_argument("--tav", type=float, default=1.0)
    toy.add_argument("--grid", action="store_true", help="also run the full (dim, T, potential) grid")

    s4 = seeded(sub.add_parser("s4", help="S(4) symmetry suite"))
    s4.add_argument("--all", action="store_true", help="include one row per permutation")

    sub.add_parser("exchange", help="parastatistics exchange tests")
    seeded(sub.add_parser("all", help="every suite"))
    return p


def run(args) -> SuiteReport:
    seed = getattr(args, "seed", None)
    if seed is None:
        seed = default_seed()
    cmd = args.command
    if cmd == "verify":
        fn = suites.SUITES[args.suite]
        rep = fn() if fn in (suites.verify_ccr, verify_vacuum) else fn(seed)
    elif cmd == "invariants":
        if args.n < 1:
            raise ValueError("--n must be at least 1")
        net = network.FiniteNet.load(args.net)
        rep = suites.verify_invariants(net, args.n, seed)
        if args.exhaustive:
            rep = merge("invariants", [rep, suites.verify_invariants_exhaustive()], rep.meta)
    elif cmd == "toy":
        cfg = ToyConfig(dim=args.dim, steps=args.steps, potential=args.potential, tav=args.tav,
                        seed=seed % 2 ** 32)
        rep = verify_toy(cfg, grid=args.grid)
    elif cmd == "s4":
        rep = verify_s4(seed)
        if not args.all:
            rep.meta.pop("rows", None)
    elif cmd == "exchange":
        rep = suites.verify_exchange()
    else:
        rep = suites.run_all(seed)
    rep.meta.setdefault("seed", seed)
    rep.meta["version"] = __version__
    return rep


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep = run(args)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"qnd: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(dumps(rep.to_dict()) + "\n")
    print(rep.summary(), file=sys.stderr)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
