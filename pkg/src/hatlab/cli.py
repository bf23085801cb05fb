"""Unified command-line front end emitting reproducible JSON-lines records.

Every record echoes its argv, parameters, and seed; re-running the echoed
command reproduces the record's values exactly (wall-clock aside).  Exact
rationals are rendered as "num/den" strings.  Exit codes: 0 success, 1
budget/guard failure, 2 usage error.

``HATLAB_BUDGET_MS`` overrides default search budgets when no explicit
``--budget`` is given; it is converted to a node budget at a documented
coarse rate of 100 nodes per millisecond so solver outcomes stay
deterministic for a given value.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from typing import Sequence

from . import __version__
from .bits import point_to_str
from .blockers import (
    blocker_schedule,
    build_ell_tuples,
    family_to_json,
    lift_blockers,
    pair_blockers,
    tuples_from_json,
    verify_blocker,
)
from .constructions import (
    cayley_distance_graph,
    hamming_power,
    hypercube_labels,
    kneser_hypercube,
    product_labels,
    random_gnp,
    shift_graph,
    shift_graph_labels,
)
from .errors import (
    BudgetExceededError,
    CapExceededError,
    GraphFormatError,
    RetryLimitError,
    SizeLimitError,
)
from .graph_core import (
    Graph,
    VertexSet,
    graph_fingerprint,
    max_independent_set,
    parse_graph_text,
    write_graph_text,
)
from .hat_game import (
    exact_value_one_player,
    exact_value_two_players,
    nested_lower_bound,
    winning_family,
)
from .hitting_sets import covering_code_check, h_of_graph
from .random_subgraphs import (
    alpha_star_star_exact,
    alpha_star_star_margin,
    alpha_star_star_mc,
    hajnal_check,
    partition_bound_eval,
    removal_trace,
)

NODES_PER_MS = 100


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected a rational like 3/8, got {text!r}") from exc


def default_budget(explicit: int | None, fallback: int) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("HATLAB_BUDGET_MS")
    if env:
        return max(1, int(env)) * NODES_PER_MS
    return fallback


# ---------------------------------------------------------------------------
# Construct-spec strings: kneser:n | shift:k | cayley:m,t | gnp:n,p,seed,
# each optionally followed by ^t for the t-fold Hamming power.
# ---------------------------------------------------------------------------


def build_from_spec(spec: str) -> tuple[Graph, list[str] | None]:
    power = 1
    if "^" in spec:
        spec, _, pw = spec.partition("^")
        power = int(pw)
        if power < 1:
            raise ValueError("power suffix must be >= 1")
    name, _, argstr = spec.partition(":")
    args = argstr.split(",") if argstr else []
    if name == "kneser":
        (n,) = map(int, args)
        G, labels = kneser_hypercube(n), hypercube_labels(n)
    elif name == "shift":
        (k,) = map(int, args)
        G, labels = shift_graph(k), shift_graph_labels(k)
    elif name == "cayley":
        m, t = map(int, args)
        G, labels = cayley_distance_graph(m, t), hypercube_labels(m)
    elif name == "gnp":
        if len(args) != 3:
            raise ValueError("gnp spec needs n,p,seed")
        G = random_gnp(int(args[0]), float(args[1]), int(args[2]))
        labels = None
    else:
        raise ValueError(f"unknown construct spec {name!r}")
    if power > 1:
        G = hamming_power(G, power)
        labels = product_labels([labels] * power) if labels is not None else None
    return G, labels


def load_graph(args) -> tuple[Graph, list[str] | None]:
    if getattr(args, "graph", None):
        with open(args.graph) as fh:
            return parse_graph_text(fh.read()), None
    if getattr(args, "construct", None):
        return build_from_spec(args.construct)
    raise ValueError("need --graph FILE or --construct SPEC")


class Emitter:
    """Collects records and writes them as JSON lines."""

    def __init__(self, out_path: str | None):
        self.out_path = out_path
        self.records: list[dict] = []
        self._lines: list[str] = []

    def record(self, rec: dict, quiet: bool = False) -> None:
        """Register a record; ``quiet`` keeps it out of the printed stream."""
        self.records.append(rec)
        if not quiet:
            self._lines.append(json.dumps(rec, sort_keys=True))

    def raw(self, text: str) -> None:
        self._lines.append(text.rstrip("\n"))

    def flush(self) -> None:
        payload = "\n".join(self._lines) + ("\n" if self._lines else "")
        if self.out_path:
            with open(self.out_path, "w") as fh:
                fh.write(payload)
        else:
            sys.stdout.write(payload)


def make_record(args, argv: Sequence[str], values: dict, seed=None, t0: float = 0.0) -> dict:
    return {
        "command": args.command,
        "argv": list(argv),
        "values": values,
        "seed": seed,
        "wall_ms": round((time.perf_counter() - t0) * 1000.0, 3),
        "version": __version__,
    }


# ---------------------------------------------------------------------------
# Subcommand implementations
# ---------------------------------------------------------------------------


def cmd_construct(args, argv, em: Emitter) -> int:
    G, labels = build_from_spec(args.spec)
    em.raw(write_graph_text(G, labels=labels if args.emit_labels else None))
    return 0


def cmd_alpha(args, argv, em: Emitter) -> int:
    t0 = time.perf_counter()
    G, labels = load_graph(args)
    budget = default_budget(args.budget, 20_000_000)
    res = max_independent_set(G, budget=budget)
    witness = list(res.witness.indices())
    values = {
        "n": G.n,
        "fingerprint": graph_fingerprint(G),
        "alpha": res.alpha,
        "alpha_bar": frac_str(res.alpha_bar),
        "witness": witness,
    }
    if labels:
        values["witness_labels"] = [labels[v] for v in witness]
    em.record(make_record(args, argv, values, t0=t0))
    return 0


def cmd_hatgame(args, argv, em: Emitter) -> int:
    t0 = time.perf_counter()
    if args.players < 1:
        raise ValueError("need at least one player")
    fam = winning_family(args.kind, args.hats)
    if args.players == 1:
        gv = exact_value_one_player(fam)
    elif args.players == 2:
        if args.mode == "lower":
            raise ValueError("two-player values are computed exactly; use --mode exact")
        gv = exact_value_two_players(fam, budget=default_budget(args.budget, 2_000_000))
    else:
        if args.mode == "exact":
            raise ValueError("exact mode stops at 2 players; use --mode lower for t >= 3")
        if args.seed is None:
            raise ValueError("--seed is required for the t >= 3 lower-bound search")
        gv = nested_lower_bound(fam, args.players, seed=args.seed, restarts=args.restarts)
    values = {
        "kind": gv.kind,
        "players": gv.t,
        "hats": gv.n,
        "value": frac_str(gv.value),
        "mode": gv.mode,
        "num_sets": fam.r,
    }
    if gv.witness is not None:
        values["witness_tables"] = [list(tb) for tb in gv.witness.tables]
    em.record(make_record(args, argv, values, seed=args.seed, t0=t0))
    return 0


def cmd_blockers(args, argv, em: Emitter) -> int:
    t0 = time.perf_counter()
    if args.action == "schedule":
        values = {
            "levels": [
                {"d": s.d, "k": str(s.k), "beta": frac_str(s.beta), "ell": None if s.ell is None else str(s.ell)}
                for s in blocker_schedule(args.max_level)
            ]
        }
        em.record(make_record(args, argv, values, t0=t0))
        return 0
    if args.action == "build":
        if args.level != 2:
            raise ValueError("only level-2 blocker families are materializable at desk scale")
        base = pair_blockers(args.bits)
        tuples = build_ell_tuples(
            args.bits, 2, seed=args.seed, target_measure=args.target_measure
        )
        fam = lift_blockers(base, tuples)
        values = {"family": family_to_json(fam), "num_tuples": len(tuples.tuples)}
        if args.verify:
            wf = winning_family("dictator", args.bits)
            budget = default_budget(args.budget, 5_000_000)
            verdicts = [
                verify_blocker(args.bits, 2, b, wf, budget=budget).is_blocker
                for b in fam.blockers
            ]
            values["verified"] = all(verdicts)
            values["verdicts"] = verdicts
        em.record(make_record(args, argv, values, seed=args.seed, t0=t0))
        return 0
    if args.action == "verify":
        with open(args.file) as fh:
            payload = json.load(fh)
        candidates = payload["blockers"] if isinstance(payload, dict) else [payload]
        wf = None
        budget = default_budget(args.budget, 5_000_000)
        results = []
        for cand in candidates:
            n, t, tuples = tuples_from_json(cand)
            if wf is None or wf.n != n:
                wf = winning_family(args.kind, n)
            res = verify_blocker(n, t, tuples, wf, budget=budget)
            results.append(
                {
                    "n": n,
                    "t": t,
                    "size": len(tuples),
                    "is_blocker": res.is_blocker,
                    "nodes": res.nodes,
                    "counterexample": None
                    if res.counterexample is None
                    else {
                        str(player): {
                            ",".join(point_to_str(x, n) for x in view): g
                            for view, g in table.items()
                        }
                        for player, table in res.counterexample.items()
                    },
                }
            )
        em.record(make_record(args, argv, {"results": results}, t0=t0))
        return 0
    raise ValueError(f"unknown blockers action {args.action!r}")


def cmd_subgraph(args, argv, em: Emitter) -> int:
    t0 = time.perf_counter()
    G, _ = load_graph(args)
    if args.action == "alphastarstar":
        if args.mc:
            if args.seed is None:
                raise ValueError("--seed is required for Monte-Carlo mode")
            res = alpha_star_star_mc(G, args.samples, args.seed)
            values = {
                "mode": res.mode,
                "estimate": float(res.estimate),
                "stderr": res.stderr,
                "samples": res.samples,
            }
        else:
            res = alpha_star_star_exact(G)
            values = {"mode": res.mode, "estimate": frac_str(res.estimate)}
        values["fingerprint"] = res.fingerprint
        em.record(make_record(args, argv, values, seed=args.seed, t0=t0))
        return 0
    if args.action == "hajnal":
        rep = hajnal_check(G, cap=args.cap)
        values = {
            "alpha": rep.alpha,
            "intersection_size": rep.intersection_size,
            "union_size": rep.union_size,
            "pass": rep.passed,
        }
        em.record(make_record(args, argv, values, t0=t0))
        return 0
    if args.action == "removal":
        trace = removal_trace(G, args.target_size, args.seed, args.threshold)
        em.raw("step,removed_vertex,alpha,successful")
        for i, step in enumerate(trace.steps, start=1):
            em.raw(f"{i},{step.removed_vertex},{step.alpha},{int(step.successful)}")
        return 0
    if args.action == "t16":
        rep = alpha_star_star_margin(G, samples=args.samples, seed=args.seed)
        values = {
            "alpha_bar": frac_str(rep.alpha_bar),
            "tau": frac_str(rep.tau),
            "bound": frac_str(rep.bound),
            "mode": rep.mode,
            "estimate": frac_str(rep.estimate) if rep.mode == "exact" else float(rep.estimate),
            "stderr": rep.stderr,
            "pass": rep.passed,
        }
        em.record(make_record(args, argv, values, seed=args.seed, t0=t0))
        return 0
    if args.action == "partition-bound":
        with open(args.partition_file) as fh:
            parts = json.load(fh)
        partition = [VertexSet.from_indices(G.n, p) for p in parts]
        sampler = "binomial"
        if args.sampler.startswith("rv:"):
            sampler = winning_family(args.sampler[3:], args.hats)
        mode = "exact" if args.exact else ("mc" if args.mc else "auto")
        res = partition_bound_eval(
            G, partition, sampler=sampler, samples=args.samples, seed=args.seed or 0, mode=mode
        )
        values = {
            "r": res.r,
            "sampler": res.sampler,
            "mode": res.mode,
            "estimate": frac_str(res.estimate) if res.mode == "exact" else float(res.estimate),
            "stderr": res.stderr,
        }
        em.record(make_record(args, argv, values, seed=args.seed, t0=t0))
        return 0
    raise ValueError(f"unknown subgraph action {args.action!r}")


def cmd_hitting(args, argv, em: Emitter) -> int:
    t0 = time.perf_counter()
    G, labels = load_graph(args)
    budget = default_budget(args.budget, 5_000_000)
    res = h_of_graph(G, cap=args.cap, budget=budget, threshold_eps=args.threshold)
    witness = list(res.witness.indices())
    values = {
        "h": res.h,
        "witness": witness,
        "num_targets": res.num_targets,
        "certificate": res.lower_bound_cert,
        "exact": res.exact,
    }
    if labels:
        values["witness_labels"] = [labels[v] for v in witness]
    if args.construct and args.construct.startswith("cayley:"):
        m, t = map(int, args.construct.split(":")[1].split(","))
        values["covering_code_ok"] = covering_code_check(m, m // 2 - t, witness)
    em.record(make_record(args, argv, values, t0=t0))
    return 0


def cmd_suite(args, argv, em: Emitter) -> int:
    from .acceptance import ALL_CHECKS

    t0 = time.perf_counter()
    all_pass = True
    done = 0
    for check in ALL_CHECKS:
        res = check(quick=args.quick)
        status = "PASS" if res.passed else "FAIL"
        all_pass &= res.passed
        done += res.passed
        # the table streams to stdout as checks finish; JSON records go to --out
        print(f"{status}  {res.cid:2d} {res.name:<28s} {res.seconds:7.2f}s  {res.detail}")
        em.record(
            {
                "command": "suite",
                "criterion": res.cid,
                "name": res.name,
                "pass": res.passed,
                "detail": res.detail,
                "wall_ms": round(res.seconds * 1000.0, 3),
                "version": __version__,
            },
            quiet=em.out_path is None,  # table already covers stdout
        )
    print(
        f"{'ALL PASS' if all_pass else 'FAILURES PRESENT'}: "
        f"{done}/{len(ALL_CHECKS)} criteria ({time.perf_counter() - t0:.1f}s)"
    )
    return 0 if all_pass else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hatlab",
        description="Exact/Monte-Carlo combinatorics of hat games and independent sets.",
    )
    parser.add_argument("--out", help="write records to this path instead of stdout")
    parser.add_argument("--threads", type=int, default=1,
                        help="cap on internal parallelism; outputs are identical for any value")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a graph in the text format")
    p.add_argument("spec", help="kneser:n | shift:k | cayley:m,t | gnp:n,p,seed, optionally ^t")
    p.add_argument("--emit-labels", action="store_true")

    p = sub.add_parser("alpha", help="exact maximum independent set")
    p.add_argument("--graph")
    p.add_argument("--construct")
    p.add_argument("--budget", type=int)

    p = sub.add_parser("hatgame", help="game values for a winning family")
    p.add_argument("--kind", choices=("dictator", "intersecting", "monotone"), required=True)
    p.add_argument("--players", type=int, required=True)
    p.add_argument("--hats", type=int, required=True)
    p.add_argument("--mode", choices=("exact", "lower"), default="exact")
    p.add_argument("--budget", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--restarts", type=int, default=4)

    p = sub.add_parser("blockers", help="blocker schedules, construction, verification")
    bsub = p.add_subparsers(dest="action", required=True)
    b = bsub.add_parser("schedule")
    b.add_argument("--max-level", type=int, required=True)
    b = bsub.add_parser("build")
    b.add_argument("--level", type=int, default=2)
    b.add_argument("--bits", type=int, required=True)
    b.add_argument("--seed", type=int, required=True)
    b.add_argument("--target-measure", type=parse_fraction)
    b.add_argument("--verify", action="store_true")
    b.add_argument("--budget", type=int)
    b = bsub.add_parser("verify")
    b.add_argument("--file", required=True)
    b.add_argument("--kind", default="dictator")
    b.add_argument("--budget", type=int)

    p = sub.add_parser("subgraph", help="random induced-subgraph statistics")
    ssub = p.add_subparsers(dest="action", required=True)
    for action in ("alphastarstar", "hajnal", "removal", "t16", "partition-bound"):
        s = ssub.add_parser(action)
        s.add_argument("--graph")
        s.add_argument("--construct")
        if action == "alphastarstar":
            s.add_argument("--exact", action="store_true")
            s.add_argument("--mc", action="store_true")
            s.add_argument("--samples", type=int, default=2000)
            s.add_argument("--seed", type=int)
        elif action == "hajnal":
            s.add_argument("--cap", type=int, default=200_000)
        elif action == "removal":
            s.add_argument("--target-size", type=int, required=True)
            s.add_argument("--seed", type=int, required=True)
            s.add_argument("--threshold", type=parse_fraction, default=Fraction(0))
        elif action == "t16":
            s.add_argument("--samples", type=int, default=2000)
            s.add_argument("--seed", type=int, required=True)
        else:
            s.add_argument("--partition-file", required=True)
            s.add_argument("--sampler", default="binomial",
                           help="binomial or rv:KIND (winning-family index sampler)")
            s.add_argument("--hats", type=int, default=2)
            s.add_argument("--samples", type=int, default=2000)
            s.add_argument("--seed", type=int)
            s.add_argument("--exact", action="store_true")
            s.add_argument("--mc", action="store_true")

    p = sub.add_parser("hitting", help="minimum hitting set of maximum independent sets")
    p.add_argument("--graph")
    p.add_argument("--construct")
    p.add_argument("--threshold", type=parse_fraction)
    p.add_argument("--budget", type=int)
    p.add_argument("--cap", type=int, default=200_000)

    p = sub.add_parser("suite", help="run the acceptance battery")
    p.add_argument("--quick", action="store_true")

    return parser


HANDLERS = {
    "construct": cmd_construct,
    "alpha": cmd_alpha,
    "hatgame": cmd_hatgame,
    "blockers": cmd_blockers,
    "subgraph": cmd_subgraph,
    "hitting": cmd_hitting,
    "suite": cmd_suite,
}


def run(argv: Sequence[str], capture: bool = False) -> tuple[int, list[dict]]:
    """Execute one command; returns (exit status, parsed records).

    With ``capture=True`` nothing is written out; callers inspect the
    returned records instead (used by the determinism replays).
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    em = Emitter(args.out)
    try:
        status = HANDLERS[args.command](args, argv, em)
    except (
        BudgetExceededError,
        CapExceededError,
        SizeLimitError,
        RetryLimitError,
        GraphFormatError,
        ValueError,
        OSError,
    ) as exc:
        print(f"hatlab: error: {exc}", file=sys.stderr)
        return 1, em.records
    if not capture:
        em.flush()
    return status, em.records


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)[0]


if __name__ == "__main__":
    sys.exit(main())
