#!/usr/bin/env python3
"""omega(T(n)) against the certified coloring and 2 floor(log2 n) - nu2(n)."""
#%% Imports
import sys
import os
import pandas as pd

sys.path.append(os.path.join("..", ".."))
from trimoduli.cliquer import clique_number, construct_coloring, upper_bound
from trimoduli.logger import Logger
from trimoduli.reporting import genresultdir, saveresultdir
from trimoduli.trigraph import build_graph

from hyperparams import HP as hp

resdir = genresultdir()
logger = Logger(frequency=hp["log_frequency"])

#%% Sweep
rows = []
logger.log_start("Coloring bound")
for n in logger.progress(range(hp["n_min"], hp["n_max"] + 1), desc="T(n)"):
    g = build_graph(n, method=hp["graph_method"])
    omega, _ = clique_number(g)
    colors = construct_coloring(n, graph=g).num_colors
    bound = upper_bound(n)
    rows.append([n, omega, colors, bound])
    logger.log_step(n, omega=omega, colors=colors, bound=bound)
logger.log_end("Coloring bound")

#%% Tightness
df = pd.DataFrame(rows, columns=["n", "omega", "colors", "bound"])
results = {
    "n_max": hp["n_max"],
    "bound_attained_by_omega": int((df["omega"] == df["bound"]).sum()),
    "bound_attained_by_coloring": int((df["colors"] == df["bound"]).sum()),
    "max_gap": int((df["bound"] - df["omega"]).max()),
}
print(results)

#%% Save
saveresultdir(resdir, hp, results, table=df)
