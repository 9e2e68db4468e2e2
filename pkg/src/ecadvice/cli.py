"""Command-line harness: generate streams, run algorithms, play the games.

Reports are single JSON objects (or JSON lines for game transcripts) on
stdout with sorted keys, so identical invocations produce byte-identical
output; human-oriented notes go to stderr.  Exit codes: 0 success, 1 a
checked property failed, 2 usage or input errors, 3 search budget blown.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Optional, Sequence

from .adversaries import (
    build_permutation_instance,
    elimination_game,
    permutation_game,
    pigeonhole_thresholds,
    rigidity_check,
    rounds_to_extinction,
    variant_family,
)
from .errors import (
    AdviceExhausted,
    ImproperColoring,
    MalformedAdvice,
    MalformedTape,
    NotBipartite,
    ParseError,
    PreconditionViolated,
    RecoloringAttempt,
    ResourceLimit,
)
from .generators import (
    build_coupled_pair,
    gen_bipartite,
    gen_d_degenerate,
    gen_forest,
    gen_star,
)
from .graphs import Graph, degeneracy, is_forest, is_proper, parse_stream, serialize_stream
from .runtime import Greedy, GreedyVariant, run_advice, run_greedy

_USAGE_ERRORS = (ParseError, PreconditionViolated, NotBipartite, OSError, ValueError)
_PROPERTY_ERRORS = (
    ImproperColoring,
    RecoloringAttempt,
    MalformedAdvice,
    MalformedTape,
    AdviceExhausted,
)


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _note(msg: str) -> None:
    sys.stderr.write(msg + "\n")


def _read_stream(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_stream(text), _sha256(text)


def cmd_gen(args: argparse.Namespace) -> int:
    comments: list[str] = []
    if args.kind == "d-degenerate":
        stream = gen_d_degenerate(args.n, args.d, args.seed)
    elif args.kind == "forest":
        stream = gen_forest(args.n, args.seed)
    elif args.kind == "bipartite":
        stream = gen_bipartite(args.a, args.b, args.p, args.seed)
    elif args.kind == "star":
        stream = gen_star(args.delta)
    elif args.kind == "coupled-pair":
        stream, e_l, e_r = build_coupled_pair(args.n)
        comments = [f"pendant left: {e_l.u} {e_l.v}", f"pendant right: {e_r.u} {e_r.v}"]
    elif args.kind == "permutation":
        pi = tuple(int(x) for x in args.pi.split(",")) if args.pi else None
        instance = build_permutation_instance(args.delta, pi)
        stream = instance.stream
        comments = [f"pi: {','.join(map(str, instance.pi))}"]
    else:  # pragma: no cover - argparse restricts choices
        raise PreconditionViolated(f"unknown kind {args.kind}")
    text = serialize_stream(stream, comments)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    g = Graph.from_stream(stream)
    dgn = degeneracy(g)[0] if g.n else 0
    _note(f"n={g.n} m={g.m} delta={g.max_degree} degeneracy={dgn}")
    return 0


def cmd_run(args: argparse.Namespace) -> int:
    stream, digest = _read_stream(args.stream)
    config = {
        "command": "run",
        "algorithm": args.alg,
        "model": args.model if args.alg == "advice" else None,
        "mode": args.mode if args.alg == "advice" else None,
        "d": args.d,
        "budget": args.budget,
        "stream": args.stream,
        "stream_sha256": digest,
    }
    if args.alg == "greedy":
        report = run_greedy(stream)
        ok = True
    else:
        run = run_advice(stream, args.d, mode=args.mode, model=args.model, budget=args.budget)
        report = run.report
        ok = bool(report.optimal)
    out = {"config": config, **report.summary(), "per_edge_bits": report.per_edge_bits}
    _emit(out)
    if args.coloring_out:
        lines = [
            f"{e.u} {e.v} {report.coloring[e.pair]}"
            for e in stream.edges
        ]
        with open(args.coloring_out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
    _note(f"colors={report.colors_used} advice_bits={report.advice_bits_read}")
    return 0 if ok else 1


def _parse_family(spec: str):
    if spec == "greedy":
        return [Greedy()]
    if spec.startswith("variants:"):
        return variant_family(int(spec.split(":", 1)[1]))
    raise PreconditionViolated(f"unknown family {spec!r}")


def cmd_adversary(args: argparse.Namespace) -> int:
    if args.game == "elimination":
        family = _parse_family(args.family)
        _, beta = pigeonhole_thresholds(args.delta)
        if args.rounds is not None:
            rounds = args.rounds
        else:
            rounds = rounds_to_extinction(len(family), beta)
        transcript = elimination_game(args.delta, family, rounds)
        for r in transcript.rounds:
            _emit(
                {
                    "round": r.row,
                    "alive_before": r.alive_before,
                    "alive_after": r.alive_after,
                    "selected_stars": list(r.selected),
                    "new_vertex": r.new_vertex,
                }
            )
        g = Graph.from_stream(transcript.stream)
        summary = {
            "game": "elimination",
            "delta": args.delta,
            "alpha": transcript.alpha,
            "beta": transcript.beta,
            "family_size": len(family),
            "rounds_played": len(transcript.rounds),
            "m": g.m,
            "forest": is_forest(g),
            "max_degree": g.max_degree,
            "colors_used": transcript.colors_used,
            "all_dead": transcript.all_dead,
        }
        _emit(summary)
        ok = transcript.all_dead and is_forest(g) and g.max_degree <= args.delta
        return 0 if ok else 1

    # permutation game
    if args.alg == "greedy":
        make = Greedy
    elif args.alg.startswith("variant:"):
        bits = args.alg.split(":", 1)[1]
        make = lambda: GreedyVariant(bits, cycle=False)  # noqa: E731
    else:
        raise PreconditionViolated(f"unknown algorithm {args.alg!r}")
    final_run = None
    if args.oracle:
        final_run = lambda s: run_advice(s, mode=args.mode).report  # noqa: E731
    result = permutation_game(args.delta, make, final_run=final_run)
    _emit(
        {
            "game": "permutation",
            "delta": args.delta,
            "pi": list(result.pi),
            "colors_used": result.report.colors_used,
            "forced": result.forced,
            "oracle_paired": bool(args.oracle),
        }
    )
    if args.oracle:
        return 0 if (not result.forced and result.report.optimal) else 1
    return 0 if result.forced else 1


def cmd_check(args: argparse.Namespace) -> int:
    if args.what == "rigidity":
        passed = rigidity_check(args.n, budget=args.budget)
        _emit({"check": "rigidity", "n": args.n, "passed": passed})
        return 0 if passed else 1

    # invariants: batch oracle/consumer agreement over generated instances
    failures: list[str] = []
    checked = 0
    for seed in range(args.seed, args.seed + args.count):
        if args.kind == "d-degenerate":
            stream = gen_d_degenerate(args.n, args.d, seed)
        elif args.kind == "forest":
            stream = gen_forest(args.n, seed)
        else:
            raise PreconditionViolated(f"unknown kind {args.kind!r}")
        run = run_advice(stream, args.d if args.kind == "d-degenerate" else None,
                         mode=args.mode, model=args.model, budget=args.budget)
        checked += 1
        g = Graph.from_stream(run.oracle.stream)
        label = f"seed={seed}"
        if not is_proper(g, run.report.coloring):
            failures.append(f"{label}: improper")
        if run.report.colors_used != run.oracle.chromatic_index:
            failures.append(f"{label}: used {run.report.colors_used} colors")
        d = run.oracle.d
        for j, members in run.oracle.partition.items():
            if Graph(members).max_degree > 2 * d:
                failures.append(f"{label}: subset {j} too dense")
        for adv in run.oracle.per_edge:
            if adv.mode == 1 and adv.rank > d:
                failures.append(f"{label}: rank {adv.rank} above {d}")
        decoded = {s.arrival: s.subset for s in run.algorithm.decoded if s.mode == 1}
        oracle_side = {
            e.arrival: run.oracle.per_edge[e.arrival].subset
            for e in run.oracle.stream.edges
            if run.oracle.per_edge[e.arrival].mode == 1
        }
        if decoded != oracle_side:
            failures.append(f"{label}: consumer subsets diverge")
    _emit(
        {
            "check": "invariants",
            "kind": args.kind,
            "count": checked,
            "failures": failures,
            "passed": not failures,
        }
    )
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ecadvice", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a stream file")
    gen.add_argument("kind", choices=[
        "d-degenerate", "forest", "bipartite", "star", "coupled-pair", "permutation",
    ])
    gen.add_argument("--n", type=int, default=20)
    gen.add_argument("--d", type=int, default=2)
    gen.add_argument("--a", type=int, default=5)
    gen.add_argument("--b", type=int, default=5)
    gen.add_argument("--p", type=float, default=0.5)
    gen.add_argument("--delta", type=int, default=3)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--pi", type=str, default=None, help="comma-separated permutation")
    gen.add_argument("-o", "--out", type=str, default=None)
    gen.set_defaults(func=cmd_gen)

    run = sub.add_parser("run", help="run an online algorithm on a stream")
    run.add_argument("stream")
    run.add_argument("--alg", choices=["advice", "greedy"], default="advice")
    run.add_argument("--model", choices=["request", "tape"], default="request")
    run.add_argument("--mode", choices=["robust", "strict"], default="robust")
    run.add_argument("--d", type=int, default=None)
    run.add_argument("--budget", type=int, default=None)
    run.add_argument("--coloring-out", type=str, default=None)
    run.set_defaults(func=cmd_run)

    adv = sub.add_parser("adversary", help="play a lower-bound game")
    adv.add_argument("game", choices=["elimination", "permutation"])
    adv.add_argument("--delta", type=int, required=True)
    adv.add_argument("--family", type=str, default="greedy")
    adv.add_argument("--rounds", type=int, default=None)
    adv.add_argument("--alg", type=str, default="greedy")
    adv.add_argument("--mode", choices=["robust", "strict"], default="robust")
    adv.add_argument("--oracle", action="store_true",
                     help="recompute records for the completed instance")
    adv.set_defaults(func=cmd_adversary)

    chk = sub.add_parser("check", help="verify structural properties")
    chk.add_argument("what", choices=["rigidity", "invariants"])
    chk.add_argument("--n", type=int, default=2)
    chk.add_argument("--kind", choices=["d-degenerate", "forest"], default="d-degenerate")
    chk.add_argument("--d", type=int, default=2)
    chk.add_argument("--count", type=int, default=10)
    chk.add_argument("--seed", type=int, default=0)
    chk.add_argument("--mode", choices=["robust", "strict"], default="robust")
    chk.add_argument("--model", choices=["request", "tape"], default="request")
    chk.add_argument("--budget", type=int, default=None)
    chk.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        _note(f"resource limit: {exc}")
        return 3
    except _PROPERTY_ERRORS as exc:
        _note(f"property violation: {type(exc).__name__}: {exc}")
        return 1
    except _USAGE_ERRORS as exc:
        _note(f"error: {type(exc).__name__}: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
