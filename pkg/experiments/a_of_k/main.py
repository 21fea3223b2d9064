#!/usr/bin/env python3
"""Least n with a k-clique in T(n), for k = 2..k_max."""
#%% Imports
import sys
import os
import pandas as pd

sys.path.append(os.path.join("..", ".."))
from trimoduli.cliquer import a_of_k_scan, verify_clique
from trimoduli.logger import Logger
from trimoduli.reporting import genresultdir, saveresultdir
from trimoduli.trigraph import build_graph

from hyperparams import HP as hp

resdir = genresultdir()
logger = Logger(frequency=hp["log_frequency"])

#%% Scan
table, witnesses = a_of_k_scan(hp["k_max"], hp["n_ceiling"],
                               graph_of=lambda n: build_graph(n, method=hp["graph_method"]),
                               logger=logger)

#%% Re-check every witness without the graph
rows = []
for k, n in table.items():
    if n is None:
        rows.append([k, None, None, None])
        continue
    members = witnesses[k].members
    rows.append([k, n, ",".join(map(str, members)), verify_clique(n, members)])
    print(f"a({k}) = {n}: {members}")

#%% Save
df = pd.DataFrame(rows, columns=["k", "a_k", "witness", "verified"])
saveresultdir(resdir, hp, {k: v for k, v in table.items()}, table=df)
