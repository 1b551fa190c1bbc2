import collections
import concurrent.futures
import logging
import time

import pandas as pd

from ..exceptions import NoPathError, PathExplosionError, SolverFailureError
from ..games import DEFAULT_STAGE_COST, edge_game_value
from ..metagame import (
    DEFAULT_MAX_PATHS, shortest_path_edge_attack, solve_meta_game
)
from ..roadmaps import (
    CompleteDAGGenerator, DEFAULT_DEGREE_RANGE, DEFAULT_STAGE_SCALE,
    DENSE_STAGE_SCALE, SparseGraphGenerator
)
from ..utilities import derive_seed


logger = logging.getLogger(__name__)

GRAPH_KINDS = ("sparse", "complete_dag")

DEFAULT_STAGE_SCALES = {
    "sparse": DEFAULT_STAGE_SCALE, "complete_dag": DENSE_STAGE_SCALE
}

# Roadmaps drawn for one run before it is recorded as having no path.
MAX_REGENERATIONS = 10

STATUS_OK = "ok"
STATUS_NO_PATH = "no_path"
STATUS_PATH_EXPLOSION = "path_explosion"
STATUS_SOLVER_FAILURE = "solver_failure"

RESULT_COLUMNS = [
    "n", "run", "W_NE", "L_SEA", "cost_ratio", "time_meta_s",
    "time_heuristic_s", "time_ratio", "p_shortest_path", "status", "retries"
]

SUMMARY_COLUMNS = [
    "n", "mean_time_ratio", "mean_cost_ratio", "mean_p_shortest_path"
]


class ExperimentConfig(
    collections.namedtuple("ExperimentConfig", [
        "vertex_counts", "graph_kind", "runs_per_size", "degree_range",
        "stage_scale", "stage_cost", "seed", "n_jobs", "max_paths"
    ])
):
    """Experiment Config Class

    Settings of a benchmark of the meta-game against the shortest path
    heuristic on random roadmaps. Every run draws its roadmap with a seed
    derived from (seed, number of vertices, run index), so a configuration
    fully determines the roadmaps it is evaluated on. Without an explicit
    stage scale, the default of the graph kind in `DEFAULT_STAGE_SCALES` is
    used.
    """
    __slots__ = ()

    def __new__(
            cls, vertex_counts, graph_kind="sparse", runs_per_size=100,
            degree_range=DEFAULT_DEGREE_RANGE, stage_scale=None,
            stage_cost=DEFAULT_STAGE_COST, seed=0, n_jobs=1,
            max_paths=DEFAULT_MAX_PATHS
    ):
        vertex_counts = tuple(int(n) for n in vertex_counts)
        if not vertex_counts or min(vertex_counts) < 3:
            raise ValueError(
                "Vertex counts must be nonempty and at least 3; got {}".format(
                    vertex_counts
                )
            )
        if graph_kind not in GRAPH_KINDS:
            raise ValueError("Unknown graph kind {!r}; expected one of {}".format(
                graph_kind, GRAPH_KINDS
            ))
        if int(runs_per_size) != runs_per_size or runs_per_size < 1:
            raise ValueError("At least one run per size is needed.")
        if int(n_jobs) != n_jobs or n_jobs < 1:
            raise ValueError("The number of jobs must be a positive integer.")
        if stage_scale is None:
            stage_scale = DEFAULT_STAGE_SCALES[graph_kind]
        return super().__new__(
            cls, vertex_counts, graph_kind, int(runs_per_size),
            tuple(degree_range), float(stage_scale), stage_cost, int(seed),
            int(n_jobs), int(max_paths)
        )

    def make_generator(self):
        if self.graph_kind == "sparse":
            return SparseGraphGenerator(
                self.degree_range, self.stage_scale, self.stage_cost
            )
        return CompleteDAGGenerator(self.stage_scale, self.stage_cost)

    def header_lines(self):
        """The configuration as `key: value` lines for result file headers."""
        lines = [
            "graph_kind: {}".format(self.graph_kind),
            "vertex_counts: {}".format(",".join(map(str, self.vertex_counts))),
            "runs_per_size: {}".format(self.runs_per_size),
        ]
        if self.graph_kind == "sparse":
            lines.append("degree_range: {},{}".format(*self.degree_range))
        lines += [
            "stage_scale: {:g}".format(self.stage_scale),
            "stage_cost: {}".format(self.stage_cost.to_string()),
            "seed: {}".format(self.seed),
        ]
        return lines


class ExperimentRecord(
    collections.namedtuple("ExperimentRecord", [
        "n_vertices", "run_index", "w_ne", "l_sea", "cost_ratio", "time_meta",
        "time_heuristic", "time_ratio", "p_shortest_path", "status", "retries"
    ], defaults=(STATUS_OK, 0))
):
    """Result of one benchmark run. Times are wall-clock seconds. A run that
    did not complete has a status other than "ok" and NaN results; `retries`
    counts the roadmaps discarded for lack of a path.
    """
    __slots__ = ()

    @classmethod
    def failed(cls, n_vertices, run_index, status, retries):
        nan = float("nan")
        return cls(
            n_vertices, run_index, nan, nan, nan, nan, nan, nan, nan, status,
            retries
        )

    @property
    def ok(self):
        return self.status == STATUS_OK


def evaluate_roadmap(roadmap, max_paths=DEFAULT_MAX_PATHS):
    """Solves the meta-game and the heuristic between vertex 0 and the last
    vertex of a roadmap.

    Returns:
        Tuple: W_NE, L_SEA, both solve times and the defender probability of
            the heuristic's path.
    """
    source, target = 0, roadmap.num_vertices - 1

    # Both timings include solving the edge-games from scratch.
    edge_game_value.cache_clear()
    start = time.perf_counter()
    meta = solve_meta_game(roadmap, source, target, max_paths=max_paths)
    time_meta = time.perf_counter() - start

    edge_game_value.cache_clear()
    start = time.perf_counter()
    heuristic = shortest_path_edge_attack(roadmap, source, target)
    time_heuristic = time.perf_counter() - start

    return (
        meta.value, heuristic.length_under_attack, time_meta, time_heuristic,
        meta.path_probability(heuristic.shortest_path)
    )


def run_single(cfg, n_vertices, run_index):
    """Generates the roadmap of one run and evaluates both methods between
    vertex 0 and the last vertex. A roadmap without a path is drawn again
    with a derived seed, up to `MAX_REGENERATIONS` times. Failures of a single
    run are returned as a record instead of being raised.

    Parameters:
        cfg (ExperimentConfig): The experiment settings.
        n_vertices (int): Number of vertices of the roadmap.
        run_index (int): Index of the run within its size.

    Returns:
        ExperimentRecord: The result of the run.
    """
    generator = cfg.make_generator()
    retries = 0
    for attempt in range(MAX_REGENERATIONS):
        keys = (cfg.seed, n_vertices, run_index)
        if attempt:
            keys += (attempt,)
        roadmap, discarded = generator.generate_counted(
            n_vertices, derive_seed(*keys)
        )
        retries += discarded
        try:
            w_ne, l_sea, time_meta, time_heuristic, p = evaluate_roadmap(
                roadmap, cfg.max_paths
            )
        except NoPathError:
            retries += 1
            logger.debug(
                "Run %d with %d vertices: no path, drawing again",
                run_index, n_vertices
            )
            continue
        except PathExplosionError as err:
            logger.warning(
                "Run %d with %d vertices: %s", run_index, n_vertices, err
            )
            return ExperimentRecord.failed(
                n_vertices, run_index, STATUS_PATH_EXPLOSION, retries
            )
        except SolverFailureError as err:
            logger.warning(
                "Run %d with %d vertices: %s (residuals %s)",
                run_index, n_vertices, err, err.residuals
            )
            return ExperimentRecord.failed(
                n_vertices, run_index, STATUS_SOLVER_FAILURE, retries
            )
        return ExperimentRecord(
            n_vertices, run_index, w_ne, l_sea, w_ne / l_sea, time_meta,
            time_heuristic, time_meta / time_heuristic, p, STATUS_OK, retries
        )
    logger.warning(
        "Run %d with %d vertices: no path after %d roadmaps",
        run_index, n_vertices, MAX_REGENERATIONS
    )
    return ExperimentRecord.failed(
        n_vertices, run_index, STATUS_NO_PATH, retries
    )


def _run_task(task):
    return run_single(*task)


def run_experiment(cfg):
    """Runs every (size, run) pair of the configuration, in parallel when
    `cfg.n_jobs` is above one.

    Parameters:
        cfg (ExperimentConfig): The experiment settings.

    Returns:
        List: The `ExperimentRecord` of every run, ordered by size and run
            index, including the runs that did not complete.
    """
    tasks = [
        (cfg, n, run)
        for n in cfg.vertex_counts for run in range(cfg.runs_per_size)
    ]
    if cfg.n_jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(cfg.n_jobs) as pool:
            records = list(pool.map(_run_task, tasks))
    else:
        records = []
        for task in tasks:
            records.append(_run_task(task))
            logger.info("Finished run %d with %d vertices", task[2], task[1])
    num_failed = sum(not r.ok for r in records)
    if num_failed:
        logger.warning("%d of %d runs did not complete", num_failed, len(tasks))
    return records


def records_to_frame(records):
    """The records as a table with the result file columns."""
    return pd.DataFrame([list(r) for r in records], columns=RESULT_COLUMNS)


def summarize(records):
    """Averages the completed records of every size.

    Returns:
        Pandas DataFrame: Columns `n`, `mean_time_ratio`, `mean_cost_ratio`
            and `mean_p_shortest_path`, one row per size.
    """
    completed = [r for r in records if r.ok]
    if len(completed) == 0:
        raise ValueError("Cannot summarize without completed records.")
    frame = records_to_frame(completed)
    summary = frame.groupby("n", sort=True).agg(
        mean_time_ratio=("time_ratio", "mean"),
        mean_cost_ratio=("cost_ratio", "mean"),
        mean_p_shortest_path=("p_shortest_path", "mean"),
    ).reset_index()
    return summary[SUMMARY_COLUMNS]


def _write_table(frame, path, cfg):
    with open(path, "w", newline="") as f:
        if cfg is not None:
            for line in cfg.header_lines():
                f.write("# {}\n".format(line))
        frame.to_csv(f, index=False)


def write_results_csv(records, path, cfg=None):
    """Writes the records to a CSV file preceded by `#` lines holding the
    configuration.
    """
    _write_table(records_to_frame(records), path, cfg)


def write_summary_csv(summary, path, cfg=None):
    _write_table(summary, path, cfg)


def read_results_csv(path):
    return pd.read_csv(path, comment="#")
