#!/usr/bin/env python3
"""Exact edge and coprime densities of T(n) over a range of n."""
#%% Imports
import sys
import os

sys.path.append(os.path.join("..", ".."))
from trimoduli.logger import Logger
from trimoduli.reporting import genresultdir, saveresultdir, stats_frame
from trimoduli.trigraph import build_graph, graph_stats

from hyperparams import HP as hp

resdir = genresultdir()
logger = Logger(frequency=hp["log_frequency"])

#%% Sweep
stats = []
logger.log_start("Density sweep")
for n in logger.progress(range(hp["n_min"], hp["n_max"] + 1, hp["n_step"]), desc="T(n)"):
    s = graph_stats(build_graph(n, method=hp["graph_method"]))
    stats.append(s)
    logger.log_step(n, edges=s.edge_count, coprime=s.coprime_count)
logger.log_end("Density sweep")

#%% Summary
last = stats[-1]
results = {
    "n": last.n,
    "edge_density": f"{last.edge_density.numerator}/{last.edge_density.denominator}",
    "coprime_density": f"{last.coprime_density.numerator}/{last.coprime_density.denominator}",
    "edge_below_coprime": sum(s.edge_density < s.coprime_density for s in stats),
    "sweep_size": len(stats),
}
print(results)

#%% Save
saveresultdir(resdir, hp, results, table=stats_frame(stats))
