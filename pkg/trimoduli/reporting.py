"""Utililities for saving results."""

import os
import sys
from datetime import datetime

import pandas as pd
import yaml


def genresultdir(root="results"):
    """Generate the results dir name."""
    now = datetime.now()
    scriptname = os.path.splitext(os.path.basename(sys.argv[0]))[0]
    resdir = os.path.join(root, f"{now.strftime('%y%m%d-%H%M%S')}-{scriptname}")
    os.makedirs(resdir)
    print("Working directory: ", resdir, file=sys.stderr)
    return resdir


def saveresultdir(resdir, save_HP, results, table=None):
    """Save hyperparams, results and an optional table to resdir."""
    with open(os.path.join(resdir, "HP.txt"), "w") as f:
        yaml.dump(save_HP, f)
    with open(os.path.join(resdir, "results.txt"), "w") as f:
        yaml.dump(results, f)
    if table is not None:
        table.to_csv(os.path.join(resdir, "table.csv"), index=False)
    print("Saved results to: ", resdir, file=sys.stderr)


def stats_frame(stats):
    """DataFrame of GraphStats rows; densities kept as exact num/den strings."""
    columns = ["n", "edge_count", "pair_count", "coprime_count",
               "edge_density", "coprime_density"]
    rows = [[s.n, s.edge_count, s.pair_count, s.coprime_count,
             _ratio(s.edge_density), _ratio(s.coprime_density)] for s in stats]
    return pd.DataFrame(rows, columns=columns)


def stats_csv(stats):
    return stats_frame(stats).to_csv(index=False, lineterminator="\n")


def _ratio(q):
    return f"{q.numerator}/{q.denominator}"


def yaml_report(report):
    return yaml.safe_dump(report, sort_keys=False)
