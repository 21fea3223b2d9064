"""Default hyperparameters for the RNS roundtrip benchmark."""

HP = {}
# Host degree and clique (omega(T(10)) = 5)
HP["n"] = 10
HP["members"] = None
# Scales c of 2^(cn) - 2^(ck) + 1
HP["c_list"] = [1, 2, 4, 8, 16, 32]
HP["num_values"] = 10000
HP["seed"] = 1111
