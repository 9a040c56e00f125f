"""Command-line entry point: ``betagraph <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import random
import sys

from . import adversary as adv
from . import applications, bench, generators, verify
from .graph import GraphFormatError, ProbeCounter, read_graph, write_graph
from .mis import caro_wei_mis, greedy_mis
from .mm import mm_unknown_beta, randomized_greedy_mm


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def _add_family_params(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("family parameters (only those of the chosen family apply)")
    g.add_argument("--avg-degree", type=float, help="line_graph: base-graph average degree")
    g.add_argument("--r", type=int, help="hyper_line_graph: hyperedge size")
    g.add_argument("--universe", type=int, help="hyper_line_graph: ground-set size")
    g.add_argument("--shuffle", action="store_true", help="clique_minus_pm: random removed matching")
    g.add_argument("--length", type=float, help="unit_interval: line length")
    g.add_argument("--window", type=float, help="unit_interval: adjacency distance")
    g.add_argument("--side", type=float, help="unit_disk: square side")
    g.add_argument("--radius", type=float, help="unit_disk: adjacency distance")
    g.add_argument("--p", type=float, help="er_random: edge probability")
    g.add_argument("--d", type=int, help="regular_bipartite: degree")
    g.add_argument("--part-size", type=int, help="hard_union: vertices per part")


_PARAM_FLAGS = {
    "avg_degree": "avg_degree", "r": "r", "universe": "universe", "length": "length",
    "window": "window", "side": "side", "radius": "radius", "p": "p", "d": "d",
    "part_size": "part_size",
}


def _spec_from_args(args, n: int) -> generators.GenSpec:
    allowed = generators.family_params(args.family)
    params = {}
    for attr, key in _PARAM_FLAGS.items():
        val = getattr(args, attr, None)
        if val is not None:
            if key not in allowed:
                raise ValueError(f"--{attr.replace('_', '-')} does not apply to {args.family}")
            params[key] = val
    if args.shuffle:
        if "shuffle" not in allowed:
            raise ValueError(f"--shuffle does not apply to {args.family}")
        params["shuffle"] = True
    return generators.GenSpec(args.family, n, params, args.seed)


def cmd_generate(args) -> int:
    g = generators.generate(_spec_from_args(args, args.n))
    write_graph(g, args.out)
    print(f"wrote {args.family} n={g.n} m={g.m} to {args.out}")
    return 0


def _read_order(spec: str, g) -> list[int] | None:
    if spec == "identity":
        return None
    if spec.startswith("file:"):
        with open(spec[5:], encoding="utf-8") as f:
            return _int_list(f.read())
    raise ValueError(f"unknown order {spec!r}")


def cmd_mis(args) -> int:
    g = read_graph(args.input)
    pc = ProbeCounter()
    if args.order == "caro-wei":
        result, st = caro_wei_mis(g, pc)
    else:
        result, st = greedy_mis(g, _read_order(args.order, g), pc)
    print(f"mis size={len(result)} work={st.work} marks={st.marks_set} probes={pc.total}")
    if args.print_set:
        print(" ".join(map(str, result.members)))
    if args.stats_out:
        with open(args.stats_out, "w", newline="") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(["n", "order", "size", "vertices_scanned", "marks_set", "work",
                        "degree_probes", "neighbor_probes"])
            w.writerow([g.n, args.order, len(result), st.vertices_scanned, st.marks_set, st.work,
                        pc.degree_probes, pc.neighbor_probes])
    return 0


def cmd_mm(args) -> int:
    g = read_graph(args.input)
    rows = []
    ok = True
    for trial in range(args.trials):
        seed = args.seed + trial
        rng = random.Random(seed)
        pc = ProbeCounter()
        if args.beta == "auto":
            m, st = mm_unknown_beta(g, rng, pc, cap_constant=args.cap_constant)
        else:
            m, st, _ = randomized_greedy_mm(g, int(args.beta), rng, pc)
        maximal = verify.is_maximal_matching(g, m) if args.check else ""
        ok = ok and maximal is not False
        rounds = ";".join(f"{b}:{t}" for b, t in st.guess_rounds)
        rows.append([trial, seed, args.beta, len(m), len(m.unmatched()), st.iterations,
                     st.low_degree_scans, st.successes, pc.degree_probes, pc.neighbor_probes,
                     rounds, maximal])
        print(f"trial {trial} seed {seed}: matched {len(m)} edges, "
              f"{len(m.unmatched())} unmatched, {st.iterations} iterations")
    if args.stats_out:
        with open(args.stats_out, "w", newline="") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(["trial", "seed", "beta", "edges", "unmatched", "iterations",
                        "low_degree_scans", "successes", "degree_probes", "neighbor_probes",
                        "guess_rounds", "maximal"])
            w.writerows(rows)
    return 0 if ok else 1


def cmd_beta(args) -> int:
    g = read_graph(args.input)
    if args.mode == "exact":
        print(verify.neighborhood_independence(g))
    else:
        print(verify.greedy_beta_lower_bound(g))
    return 0


def cmd_adversary(args) -> int:
    strategy = adv.resolve_strategy(args.strategy)
    rows = []
    for k in args.k:
        v = adv.referee(strategy, k, mode=args.mode, seed=args.seed)
        rows.append([k, v.queries, v.refuted, v.witness_hash()])
        status = "refuted" if v.refuted else "not refuted"
        print(f"k={k} n={10 * k} queries={v.queries} budget={v.budget} {status}: {v.reason}")
    if args.report:
        with open(args.report, "w", newline="") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(["k", "queries", "refuted", "witness_hash"])
            w.writerows(rows)
    return 0


def cmd_bench(args) -> int:
    spec = _spec_from_args(args, 0)
    rows = bench.sweep(spec, args.n, args.trials, args.algo, args.seed,
                       timing=args.timing, jobs=args.jobs)
    if args.out:
        bench.write_csv(rows, args.out)
    bad = [r for r in rows if not bench.row_bound_ok(r)]
    print(f"{len(rows)} runs, {len(bad)} hard-bound violations")
    if args.fit:
        report = bench.fit(rows, args.fit, "iterations" if args.algo != "mis" else "work")
        print(report.to_text(), end="")
        if args.fit_out:
            report.write_csv(args.fit_out)
    return 0 if not bad else 1


def cmd_apps(args) -> int:
    g = read_graph(args.input)
    pc = ProbeCounter()
    if args.task == "vc":
        s = applications.approx_vertex_cover(g, random.Random(args.seed), pc)
        print(f"vertex cover size={len(s)}")
        print(" ".join(map(str, sorted(s.members))))
    elif args.task == "caro-wei":
        s = applications.caro_wei_independent_set(g, pc)
        print(f"independent set size={len(s)} caro-wei bound={float(verify.caro_wei_sum(g)):.4f}")
        print(" ".join(map(str, s.members)))
    else:
        m = applications.mm_via_line_graph(g, random.Random(args.seed), pc)
        print(f"matching size={len(m)}")
        for u, v in m.edges:
            print(u, v)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="betagraph", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a graph from a family")
    p.add_argument("--family", required=True, choices=generators.FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    _add_family_params(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("mis", help="greedy maximal independent set")
    p.add_argument("--input", required=True)
    p.add_argument("--order", default="identity", help="identity | caro-wei | file:<path>")
    p.add_argument("--stats-out")
    p.add_argument("--print-set", action="store_true")
    p.set_defaults(func=cmd_mis)

    p = sub.add_parser("mm", help="randomized greedy maximal matching")
    p.add_argument("--input", required=True)
    p.add_argument("--beta", default="auto", help="known beta (int) or 'auto' for the doubling search")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--cap-constant", type=float, default=64)
    p.add_argument("--stats-out")
    p.add_argument("--no-check", dest="check", action="store_false",
                   help="skip the full-scan maximality check")
    p.set_defaults(func=cmd_mm)

    p = sub.add_parser("beta", help="neighborhood independence number")
    p.add_argument("--input", required=True)
    p.add_argument("--mode", choices=("exact", "greedy"), default="exact")
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("adversary", help="duel a deterministic matching strategy against the adversary")
    p.add_argument("--k", type=int, nargs="+", required=True)
    p.add_argument("--strategy", default="greedy", help="greedy | exhaustive | empty | plugin:<module>:<callable>")
    p.add_argument("--mode", choices=("deterministic", "random"), default="deterministic")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report")
    p.set_defaults(func=cmd_adversary)

    p = sub.add_parser("bench", help="scaling sweep with CSV output")
    p.add_argument("--family", required=True, choices=generators.FAMILIES)
    p.add_argument("--algo", choices=bench.ALGORITHMS, default="mis")
    p.add_argument("--n", type=_int_list, required=True, help="comma-separated vertex counts")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--fit", choices=sorted(bench.MODELS))
    p.add_argument("--fit-out")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="record wall-clock nanoseconds")
    _add_family_params(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("apps", help="vertex cover, Caro-Wei set, matching via line graph")
    p.add_argument("--task", choices=("vc", "caro-wei", "mm-line"), required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_apps)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "command", None) in ("bench", "generate") and not hasattr(args, "shuffle"):
        args.shuffle = False
    try:
        return args.func(args)
    except (GraphFormatError, ValueError, verify.CapacityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
