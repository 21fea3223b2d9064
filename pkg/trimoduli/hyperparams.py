"""Default hyperparameters, overridable from a YAML file."""

import os

import yaml

HP = {}
# Graph cache root
HP["cache_dir"] = os.path.join(os.path.expanduser("~"), ".cache", "trimoduli")
# Largest n built or searched without an explicit --budget
HP["n_max_unbudgeted"] = 300
# Scales checked for scalability
HP["c_min"] = 1
HP["c_max"] = 8
# RNS micro benchmark
HP["bench_values"] = 10000
HP["bench_bits"] = 0
# Seed for sampled tests and benchmarks
HP["seed"] = 1111
# Resultant engine behind graph construction: "modular" or "subresultant"
HP["graph_method"] = "modular"
# Frequency of the logger
HP["log_frequency"] = 10


def load_hp(path=None, base=None):
    """Return a copy of the defaults with the keys of a YAML file merged in."""
    hp = dict(HP if base is None else base)
    if path is None:
        return hp
    with open(path, "r", encoding="utf-8") as f:
        overrides = yaml.safe_load(f) or {}
    if not isinstance(overrides, dict):
        raise ValueError(f"{path}: expected a mapping of hyperparameters")
    unknown = sorted(set(overrides) - set(hp))
    if unknown:
        raise ValueError(f"{path}: unknown hyperparameters {', '.join(map(str, unknown))}")
    hp.update(overrides)
    return hp
