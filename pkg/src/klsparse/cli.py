"""Command-line surface: decide, extract, components, maximal-2k,
generate, verify, bench.

Exit codes: 0 success, 2 input parse failure, 3 usage or regime error.
All randomness flows from ``--seed``; nothing depends on the wall clock
except the benchmark's runtime column.
"""

from __future__ import annotations

import argparse
import sys
import time

from .components import (
    NotSparseInputError,
    OrderRegimeViolationError,
    StructureViolationError,
    components_of,
    extract_with_components,
)
from .generators import FAMILIES, GenSpec
from .heuristics import STRATEGY_NAMES, make_strategy
from .multigraph import GraphParseError, Multigraph, parse_graph, serialize_graph
from .oracle import BudgetExceededError, is_sparse_bruteforce
from .orientation import Instrumentation
from .pebble import (
    PebbleEngine,
    SparsityParams,
    UnweightedInputError,
    WrongRegimeError,
    decide,
    extract_weighted,
)
from .sparse2k import NotSimpleInputError, extract_maximal_2k

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_USAGE = 3

BENCH_HEADER = (
    "family,n,m,k,l,heuristic,trial_seed,accepted,"
    "runtime_ns,bfs_node_visits,path_reversals,early_terminated"
)
AGGREGATE_HEADER = "family,n,k,l,heuristic,trials,mean_runtime_ns"


class _UsageExit(Exception):
    """Internal: abort the subcommand with exit code 3."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_graph(path: str | None) -> Multigraph:
    if path is None or path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _params(args) -> SparsityParams:
    try:
        return SparsityParams(args.k, args.l)
    except ValueError as exc:
        raise _UsageExit(str(exc)) from exc


def _run_extraction(graph, params, heuristic: str, seed: int):
    """Extraction routed through the right engine for the strategy."""
    strategy = make_strategy(heuristic, graph, params, seed)
    if strategy.uses_components:
        report, _ = extract_with_components(graph, params, strategy)
        return report
    engine = PebbleEngine(graph, params)
    return engine.run(strategy)


def _cmd_decide(args) -> int:
    graph = _read_graph(args.input)
    params = _params(args)
    tight_size = params.tight_size(graph.n)
    if params.is_augmenting_regime:
        report = decide(graph, params)
        if report.is_tight:
            word = "tight"
        elif report.is_spanning:
            word = "spanning"
        elif report.is_sparse:
            word = "sparse"
        else:
            word = "none"
    else:
        # l = 2k: sparse and tight are decidable by one maximal pass
        # (subgraphs of sparse graphs are sparse); spanning is not claimed
        report = extract_maximal_2k(graph, params.k)
        sparse = report.accepted_count == graph.m
        if sparse and graph.m == tight_size:
            word = "tight"
        elif sparse:
            word = "sparse"
        else:
            word = "none"
    print(word)
    print(f"accepted={report.accepted_count} of {graph.m} tight_size={tight_size}")
    return EXIT_OK


def _cmd_extract(args) -> int:
    graph = _read_graph(args.input)
    params = _params(args)
    if args.weighted:
        if args.heuristic is not None:
            raise _UsageExit(
                "--weighted fixes the processing order; --heuristic conflicts"
            )
        report = extract_weighted(graph, params)
    else:
        heuristic = args.heuristic if args.heuristic is not None else "Basic"
        report = _run_extraction(graph, params, heuristic, args.seed)
    for e in sorted(report.accepted):
        print(e)
    print(f"accepted={report.accepted_count} of {graph.m}")
    if report.total_weight is not None:
        print(f"weight={report.total_weight!r}")
    return EXIT_OK


def _cmd_components(args) -> int:
    graph = _read_graph(args.input)
    params = _params(args)
    comps = components_of(graph, params)
    for comp in comps:
        print(" ".join(str(x) for x in comp))
    print(f"components={len(comps)}")
    return EXIT_OK


def _cmd_maximal_2k(args) -> int:
    graph = _read_graph(args.input)
    report = extract_maximal_2k(graph, args.k)
    for e in sorted(report.accepted):
        print(e)
    print(f"accepted={report.accepted_count} of {graph.m}")
    return EXIT_OK


def _cmd_generate(args) -> int:
    base = None
    if args.family == "molecular":
        base = _read_graph(args.input)
    spec = GenSpec(
        family=args.family,
        seed=args.seed,
        n=args.n,
        p=args.p,
        m_attach=args.m_attach,
        base_n=args.n,
        k_trees=args.k_trees,
        multiplicity=args.multiplicity,
        base=base,
    )
    graph = spec.build()
    _write_text(args.output, serialize_graph(graph))
    return EXIT_OK


def _cmd_verify(args) -> int:
    graph = _read_graph(args.input)
    params = _params(args)
    ok, witness = is_sparse_bruteforce(graph, params)
    if ok:
        print("sparse")
    else:
        print("not-sparse witness=" + " ".join(str(x) for x in witness))
    return EXIT_OK


def _parse_pairs(texts: list[str]) -> list[SparsityParams]:
    pairs = []
    for text in texts:
        raw = text.replace(":", ",").split(",")
        if len(raw) != 2:
            raise _UsageExit(f"bad --pair {text!r}; expected K,L")
        try:
            pairs.append(SparsityParams(int(raw[0]), int(raw[1])))
        except ValueError as exc:
            raise _UsageExit(str(exc)) from exc
    return pairs


def _bench_graph(family: str, n: int, args, seed: int) -> Multigraph:
    if family == "erdos-renyi":
        return GenSpec(family=family, seed=seed, n=n, p=args.p).build()
    if family == "barabasi-albert":
        return GenSpec(family=family, seed=seed, n=n, m_attach=args.m_attach).build()
    if family == "rigid":
        return GenSpec(family=family, seed=seed, base_n=n).build()
    if family == "tight":
        return GenSpec(family=family, seed=seed, n=n, k_trees=args.k_trees).build()
    raise _UsageExit(f"family {family!r} not benchable")


def _cmd_bench(args) -> int:
    families = args.family or ["erdos-renyi"]
    sizes = args.n or [100]
    pairs = _parse_pairs(args.pair or ["2,3"])
    for p in pairs:
        if not p.is_augmenting_regime:
            raise _UsageExit(f"bench needs l < 2k, got (k={p.k}, l={p.l})")
    heuristics = args.heuristic or list(STRATEGY_NAMES)
    for h in heuristics:
        make_strategy(h, Multigraph(1, []), SparsityParams(1, 0))  # validate name
    if args.trials < 1:
        raise _UsageExit(f"--trials must be at least 1, got {args.trials}")

    lines = [BENCH_HEADER]
    sums: dict[tuple, list[float]] = {}
    for family in families:
        for n in sizes:
            for params in pairs:
                for trial in range(args.trials):
                    trial_seed = args.seed + trial
                    graph = _bench_graph(family, n, args, trial_seed)
                    for heuristic in heuristics:
                        counters = Instrumentation()
                        t0 = time.perf_counter_ns()
                        strategy = make_strategy(
                            heuristic, graph, params, trial_seed
                        )
                        if strategy.uses_components:
                            report, _ = extract_with_components(
                                graph, params, strategy, counters
                            )
                        else:
                            report = PebbleEngine(graph, params, counters).run(
                                strategy
                            )
                        runtime = time.perf_counter_ns() - t0
                        lines.append(
                            f"{family},{graph.n},{graph.m},{params.k},{params.l},"
                            f"{heuristic},{trial_seed},{report.accepted_count},"
                            f"{runtime},{counters.bfs_node_visits},"
                            f"{counters.path_reversals},"
                            f"{counters.early_termination_hit}"
                        )
                        key = (family, graph.n, params.k, params.l, heuristic)
                        sums.setdefault(key, []).append(runtime)
    if args.aggregate:
        lines = [AGGREGATE_HEADER]
        for key in sorted(sums):
            family, n, k, l, heuristic = key
            runs = sums[key]
            mean = sum(runs) / len(runs)
            lines.append(
                f"{family},{n},{k},{l},{heuristic},{len(runs)},{mean:.0f}"
            )
    _write_text(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--input", "-i", default=None, help="input graph file (default stdin)"
    )


def _add_kl(p: argparse.ArgumentParser, need_l: bool = True) -> None:
    p.add_argument("-k", type=int, required=True, help="sparsity parameter k")
    if need_l:
        p.add_argument("-l", type=int, required=True, help="sparsity parameter l")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="klsparse", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="classify: sparse / tight / spanning / none")
    _add_kl(p)
    _add_input(p)
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("extract", help="maximum (k,l)-sparse subgraph, l < 2k")
    _add_kl(p)
    _add_input(p)
    p.add_argument("--heuristic", default=None, help="strategy name (default Basic)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--weighted",
        action="store_true",
        help="maximum-weight extraction by non-increasing weight",
    )
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("components", help="(k,l)-components of a sparse graph")
    _add_kl(p)
    _add_input(p)
    p.set_defaults(func=_cmd_components)

    p = sub.add_parser(
        "maximal-2k", help="inclusion-wise maximal (k,2k)-sparse subgraph"
    )
    _add_kl(p, need_l=False)
    _add_input(p)
    p.set_defaults(func=_cmd_maximal_2k)

    p = sub.add_parser("generate", help="benchmark graph families")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, default=0, help="node count (base_n for rigid)")
    p.add_argument("--p", type=float, default=0.1, help="edge probability (G(n,p))")
    p.add_argument("--m-attach", type=int, default=1, dest="m_attach")
    p.add_argument("--k-trees", type=int, default=1, dest="k_trees")
    p.add_argument("--multiplicity", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    _add_input(p)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="brute-force sparsity check (small graphs)")
    _add_kl(p)
    _add_input(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="benchmark harness, CSV output")
    p.add_argument("--family", action="append", choices=FAMILIES[:4])
    p.add_argument("--n", type=int, action="append")
    p.add_argument("--pair", action="append", help="K,L (repeatable)")
    p.add_argument("--heuristic", action="append")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.1)
    p.add_argument("--m-attach", type=int, default=3, dest="m_attach")
    p.add_argument("--k-trees", type=int, default=3, dest="k_trees")
    p.add_argument("--aggregate", action="store_true")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"klsparse: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _UsageExit as exc:
        print(f"klsparse: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (
        WrongRegimeError,
        OrderRegimeViolationError,
        StructureViolationError,
        NotSparseInputError,
        NotSimpleInputError,
        UnweightedInputError,
        BudgetExceededError,
        ValueError,
        OSError,
    ) as exc:
        print(f"klsparse: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
