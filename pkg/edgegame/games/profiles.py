import itertools

import pandas as pd

from .continuum import approximation_error
from .edge_game import solve_edge_game


def horizon_profile(S, horizons):
    """Tabulates how an edge-game depends on its length: the value `V_0` and
    the probabilities of defending and attacking at the first stage, for every
    number of stages in `horizons`.

    Parameters:
        S (StageCostMatrix): The stage cost matrix.
        horizons (iterable of int): Numbers of stages K_e to evaluate.

    Returns:
        Pandas DataFrame: Columns `num_stages`, `value`, `p_defend_first`,
            `p_attack_first`, one row per horizon.
    """
    rows = []
    for K in horizons:
        solution = solve_edge_game(S, K)
        rows.append({
            "num_stages": int(K),
            "value": solution.value,
            "p_defend_first": solution.defender_policies[0].p_active,
            "p_attack_first": solution.attacker_policies[0].p_active,
        })
    return pd.DataFrame(
        rows, columns=["num_stages", "value", "p_defend_first", "p_attack_first"]
    )


def error_profile(r1_values, r2_values, horizons):
    """Percentage error of the approximate continuum value against the
    discrete recursion on the grid r1 x r2 x horizons.
    """
    rows = [
        {
            "r1": r1, "r2": r2, "num_stages": int(K),
            "error_pct": approximation_error(r1, r2, K),
        }
        for r1, r2, K in itertools.product(r1_values, r2_values, horizons)
    ]
    return pd.DataFrame(rows, columns=["r1", "r2", "num_stages", "error_pct"])
