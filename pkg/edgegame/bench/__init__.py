from .experiment import (
    ExperimentConfig, ExperimentRecord, GRAPH_KINDS, DEFAULT_STAGE_SCALES,
    MAX_REGENERATIONS, RESULT_COLUMNS, SUMMARY_COLUMNS, STATUS_OK,
    STATUS_NO_PATH, STATUS_PATH_EXPLOSION, STATUS_SOLVER_FAILURE,
    evaluate_roadmap, run_single, run_experiment, records_to_frame, summarize,
    write_results_csv, write_summary_csv, read_results_csv
)
