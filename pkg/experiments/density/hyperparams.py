"""Default hyperparameters for the edge/coprime density sweep."""

HP = {}
HP["n_min"] = 3
HP["n_max"] = 200
HP["n_step"] = 1
HP["graph_method"] = "modular"
# Frequency of the logger
HP["log_frequency"] = 20
