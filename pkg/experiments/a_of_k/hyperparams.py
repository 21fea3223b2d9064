"""Default hyperparameters for the a(k) scan."""

HP = {}
# Largest clique size looked for
HP["k_max"] = 8
# Stop scanning past this n (a(9) = 82, a(10) = 1668 need much longer runs)
HP["n_ceiling"] = 41
# Resultant engine behind T(n)
HP["graph_method"] = "modular"
# Frequency of the logger
HP["log_frequency"] = 5
