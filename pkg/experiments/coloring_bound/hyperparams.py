"""Default hyperparameters for the clique-number versus coloring-bound sweep."""

HP = {}
HP["n_min"] = 2
HP["n_max"] = 300
HP["graph_method"] = "modular"
# Frequency of the logger
HP["log_frequency"] = 25
