#!/usr/bin/env python3
"""Folding reduction and Garner reconstruction against plain big-int arithmetic."""
#%% Imports
import sys
import os
import pandas as pd

sys.path.append(os.path.join("..", ".."))
from trimoduli.cliquer import Clique, clique_number
from trimoduli.logger import Logger
from trimoduli.reporting import genresultdir, saveresultdir
from trimoduli.rns import bench_roundtrip, build_system
from trimoduli.trigraph import build_graph

from hyperparams import HP as hp

resdir = genresultdir()
logger = Logger()

#%% Moduli clique
if hp["members"] is None:
    _, clique = clique_number(build_graph(hp["n"]))
else:
    clique = Clique(hp["n"], tuple(hp["members"]))
print(f"Clique of T({clique.n}): {clique.members}")

#%% Benchmark every scale
rows = []
logger.log_start("RNS benchmark")
for c in hp["c_list"]:
    system = build_system(clique, c, scale_range=None, logger=logger)
    report = bench_roundtrip(system, hp["num_values"], seed=hp["seed"])
    t = report["timings_ns"]
    rows.append([c, report["capacity_bits"]] + [t[key] for key in sorted(t)])
    logger.log_step(c, reduce=t["reduce"], reduce_naive=t["reduce_naive"])
logger.log_end("RNS benchmark")

#%% Save
df = pd.DataFrame(rows, columns=["c", "capacity_bits"] + sorted(t))
saveresultdir(resdir, hp, {"n": clique.n, "members": list(clique.members)}, table=df)
