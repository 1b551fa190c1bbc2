"""Command line interface of the edgegame package.

Every subcommand prints its resolved configuration, defaults included, before
its results. Exit codes are 0 on success, 1 on domain errors and 2 on usage
errors.
"""
import argparse
import json
import logging
import os
import sys

import pandas as pd

from .bench import (
    DEFAULT_STAGE_SCALES, ExperimentConfig, GRAPH_KINDS, run_experiment,
    summarize, write_results_csv, write_summary_csv, records_to_frame
)
from .exceptions import EdgeGameError
from .games import (
    DEFAULT_STAGE_COST, StageCostMatrix, analytic_value, approx_value,
    approximation_error, solve_edge_game
)
from .metagame import (
    meta_game_to_dict, sensitivity_sweep_costs,
    sensitivity_sweep_stages, shortest_path_edge_attack, solve_meta_game,
    write_meta_game_csv
)
from .roadmaps import (
    CompleteDAGGenerator, DEFAULT_DEGREE_RANGE, SparseGraphGenerator,
    load_roadmap, save_roadmap, simple_network
)
from .version import __version__


logger = logging.getLogger(__name__)


class UsageError(ValueError):
    pass


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("{!r} is not an integer".format(text))
    if value < 1:
        raise argparse.ArgumentTypeError("{} is not positive".format(value))
    return value


def float_list(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "{!r} is not a comma separated list of numbers".format(text)
        )


def int_list(text):
    values = [positive_int(v) for v in text.split(",") if v.strip()]
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def add_stage_cost_arguments(parser, grids=False):
    ratio = float_list if grids else float
    parser.add_argument(
        "--s", help="stage cost matrix row-major as s11,s12,s21,s22"
    )
    parser.add_argument("--r1", type=ratio, help="penalty ratio s21/s11")
    parser.add_argument("--r2", type=ratio, help="mobility ratio s22/s11")
    parser.add_argument(
        "--s11", type=float, default=1., help="cost of defense with --r1/--r2"
    )


def add_output_arguments(parser):
    parser.add_argument("--out", help="file receiving machine readable output")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")


def add_graph_arguments(parser, required=True):
    parser.add_argument("--graph", required=required, help="roadmap JSON file")
    parser.add_argument("--source", type=int, default=0)
    parser.add_argument(
        "--target", type=int, help="goal vertex; defaults to the last vertex"
    )


def add_generator_arguments(parser):
    parser.add_argument("--kind", choices=GRAPH_KINDS, default="sparse")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--degree-lo", type=float, default=DEFAULT_DEGREE_RANGE[0]
    )
    parser.add_argument(
        "--degree-hi", type=float, default=DEFAULT_DEGREE_RANGE[1]
    )
    parser.add_argument(
        "--stage-scale", type=float,
        help="stages per unit of distance; the default depends on --kind"
    )


def resolve_stage_cost(args):
    """The stage cost given either explicitly or through the ratios."""
    ratios = args.r1 is not None or args.r2 is not None
    if args.s is not None and ratios:
        raise UsageError("--s cannot be combined with --r1/--r2")
    if args.s is not None:
        return StageCostMatrix.from_sequence(args.s)
    if ratios:
        if args.r1 is None or args.r2 is None:
            raise UsageError("--r1 and --r2 must be given together")
        return StageCostMatrix.from_ratios(args.s11, args.r1, args.r2)
    return DEFAULT_STAGE_COST


def print_config(command, settings):
    print("# command: {}".format(command))
    for key, value in settings.items():
        if isinstance(value, StageCostMatrix):
            value = value.to_string()
        elif isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        print("# {}: {}".format(key, value))


def write_frame(frame, path, fmt):
    if fmt == "json":
        frame.to_json(path, orient="records", indent=2)
    else:
        frame.to_csv(path, index=False)


def write_json(data, path):
    with open(path, "w") as f:
        json.dump(data, f, indent=2)
        f.write("\n")


def load_graph(args):
    roadmap = load_roadmap(args.graph)
    target = roadmap.num_vertices - 1 if args.target is None else args.target
    return roadmap, args.source, target


def run_edge_game(args):
    S = resolve_stage_cost(args)
    print_config("edge-game", {"stage_cost": S, "stages": args.stages})
    solution = solve_edge_game(S, args.stages)
    Y, Z = solution.policy_arrays()
    frame = pd.DataFrame({
        "stage": range(1, args.stages + 1),
        "value": solution.values[:-1],
        "p_defend": Y[:, 0],
        "p_attack": Z[:, 0],
    })
    print("V_0 = {:.6f}".format(solution.value))
    print(frame.to_string(index=False))
    if args.out:
        write_frame(frame, args.out, args.format)


def run_analytic(args):
    if args.r1 is None or args.r2 is None:
        raise UsageError("analytic needs --r1 and --r2")
    print_config("analytic", {
        "r1": args.r1, "r2": args.r2, "stages": args.stages
    })
    K = args.stages
    stages = range(1, K + 1)
    recursion = solve_edge_game(
        StageCostMatrix.from_ratios(1., args.r1, args.r2), K
    ).values
    frame = pd.DataFrame({
        "stage": stages,
        "analytic": [analytic_value(args.r1, args.r2, K, k) for k in stages],
        "approx": [approx_value(args.r1, args.r2, K, k) for k in stages],
        "recursion": recursion[:-1],
    })
    print(frame.to_string(index=False))
    print("approximation error = {:.4f}%".format(
        approximation_error(args.r1, args.r2, K)
    ))
    if args.out:
        write_frame(frame, args.out, args.format)


def run_meta_game(args):
    roadmap, source, target = load_graph(args)
    print_config("meta-game", {
        "graph": args.graph, "source": source, "target": target
    })
    meta = solve_meta_game(roadmap, source, target)
    write_meta_game_csv(meta, sys.stdout)
    if args.out:
        if args.format == "json":
            write_json(meta_game_to_dict(meta), args.out)
        else:
            write_meta_game_csv(meta, args.out)


def run_heuristic(args):
    roadmap, source, target = load_graph(args)
    print_config("heuristic", {
        "graph": args.graph, "source": source, "target": target
    })
    result = shortest_path_edge_attack(roadmap, source, target)
    data = {
        "shortest_path": "->".join(map(str, result.vertex_path)),
        "L_SEA": result.length_under_attack,
        "worst_edge": roadmap.edges[result.worst_edge].label,
    }
    for key, value in data.items():
        print("{} = {}".format(key, value))
    if args.out:
        if args.format == "json":
            write_json(data, args.out)
        else:
            pd.DataFrame([data]).to_csv(args.out, index=False)


def run_sweep_costs(args):
    if args.s is not None:
        raise UsageError("sweep-costs takes --r1/--r2 grids, not --s")
    if not args.r1 or not args.r2:
        raise UsageError("sweep-costs needs --r1 and --r2 grids")
    if args.graph is None:
        roadmap, source = simple_network(), args.source
        target = 2 if args.target is None else args.target
    else:
        roadmap, source, target = load_graph(args)
    print_config("sweep-costs", {
        "graph": args.graph or "simple_network", "source": source,
        "target": target, "r1": args.r1, "r2": args.r2, "s11": args.s11
    })
    grid = sensitivity_sweep_costs(
        roadmap, source, target, args.r1, args.r2, args.s11
    )
    frame = grid.to_frame()
    print(frame.to_string(index=False))
    if args.out:
        write_frame(frame, args.out, args.format)


def run_sweep_stages(args):
    S = resolve_stage_cost(args)
    print_config("sweep-stages", {
        "stage_cost": S, "stages": args.stages, "alt_stages": args.alt_stages
    })
    grid = sensitivity_sweep_stages(S, args.stages, args.alt_stages)
    frame = grid.to_frame()
    print(frame.to_string(index=False))
    if args.out:
        write_frame(frame, args.out, args.format)


def resolve_stage_scale(args):
    if args.stage_scale is None:
        return DEFAULT_STAGE_SCALES[args.kind]
    return args.stage_scale


def make_generator(args, S):
    if args.kind == "sparse":
        return SparseGraphGenerator(
            (args.degree_lo, args.degree_hi), resolve_stage_scale(args), S
        )
    return CompleteDAGGenerator(resolve_stage_scale(args), S)


def run_generate(args):
    if args.format != "json":
        raise UsageError("generate writes roadmaps as JSON only")
    S = resolve_stage_cost(args)
    print_config("generate", {
        "kind": args.kind, "sizes": args.sizes, "seed": args.seed,
        "degree_range": (args.degree_lo, args.degree_hi),
        "stage_scale": resolve_stage_scale(args), "stage_cost": S
    })
    roadmap = make_generator(args, S).generate(args.sizes, args.seed)
    print("vertices = {}".format(roadmap.num_vertices))
    print("edges = {}".format(roadmap.num_edges))
    if args.out:
        save_roadmap(roadmap, args.out)


def experiment_settings(cfg):
    settings = cfg._asdict()
    if cfg.graph_kind != "sparse":
        del settings["degree_range"]
    return settings


def run_bench(args):
    S = resolve_stage_cost(args)
    cfg = ExperimentConfig(
        args.sizes, args.kind, args.runs, (args.degree_lo, args.degree_hi),
        args.stage_scale, S, args.seed, args.jobs
    )
    print_config("bench", experiment_settings(cfg))
    records = run_experiment(cfg)
    if not any(r.ok for r in records):
        raise EdgeGameError("No benchmark run completed.")
    summary = summarize(records)
    print(summary.to_string(index=False))
    if args.out:
        stem, ext = os.path.splitext(args.out)
        summary_path = "{}_summary{}".format(stem, ext)
        if args.format == "json":
            records_to_frame(records).to_json(
                args.out, orient="records", indent=2
            )
            summary.to_json(summary_path, orient="records", indent=2)
        else:
            write_results_csv(records, args.out, cfg)
            write_summary_csv(summary, summary_path, cfg)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="edgegame",
        description="Secure routing with edge-games and a path meta-game."
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __version__
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v", "--verbose", action="store_true", help="debug logging on stderr"
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    p = commands.add_parser(
        "edge-game", parents=[common], help="solve a single edge-game"
    )
    add_stage_cost_arguments(p)
    p.add_argument("--stages", type=positive_int, required=True)
    add_output_arguments(p)
    p.set_defaults(func=run_edge_game)

    p = commands.add_parser(
        "analytic", parents=[common],
        help="continuum approximations of the edge-game value"
    )
    p.add_argument("--r1", type=float)
    p.add_argument("--r2", type=float)
    p.add_argument("--stages", type=positive_int, required=True)
    add_output_arguments(p)
    p.set_defaults(func=run_analytic)

    p = commands.add_parser(
        "meta-game", parents=[common], help="solve the path meta-game"
    )
    add_graph_arguments(p)
    add_output_arguments(p)
    p.set_defaults(func=run_meta_game)

    p = commands.add_parser(
        "heuristic", parents=[common],
        help="shortest path against a single edge attack"
    )
    add_graph_arguments(p)
    add_output_arguments(p)
    p.set_defaults(func=run_heuristic)

    p = commands.add_parser(
        "sweep-costs", parents=[common],
        help="equilibrium probabilities over r1 and r2 grids"
    )
    add_graph_arguments(p, required=False)
    add_stage_cost_arguments(p, grids=True)
    add_output_arguments(p)
    p.set_defaults(func=run_sweep_costs)

    p = commands.add_parser(
        "sweep-stages", parents=[common],
        help="equilibrium probabilities over stage counts"
    )
    add_stage_cost_arguments(p)
    p.add_argument(
        "--stages", type=int_list, default=[6], help="direct edge stages"
    )
    p.add_argument(
        "--alt-stages", type=int_list, default=[1, 2, 3, 4, 5, 6],
        help="stages of each alternative leg"
    )
    add_output_arguments(p)
    p.set_defaults(func=run_sweep_stages)

    p = commands.add_parser(
        "generate", parents=[common], help="generate a random roadmap"
    )
    add_stage_cost_arguments(p)
    add_generator_arguments(p)
    p.add_argument("--sizes", type=positive_int, required=True)
    p.add_argument("--out", help="roadmap JSON file")
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.set_defaults(func=run_generate)

    p = commands.add_parser(
        "bench", parents=[common],
        help="compare the meta-game with the heuristic on random roadmaps"
    )
    add_stage_cost_arguments(p)
    add_generator_arguments(p)
    p.add_argument("--sizes", type=int_list, required=True)
    p.add_argument("--runs", type=positive_int, default=100)
    p.add_argument("--jobs", type=positive_int, default=1)
    add_output_arguments(p)
    p.set_defaults(func=run_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )
    try:
        args.func(args)
    except (EdgeGameError, OSError) as err:
        print("error: {}".format(err), file=sys.stderr)
        return 1
    except ValueError as err:
        parser.print_usage(sys.stderr)
        print("usage error: {}".format(err), file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
