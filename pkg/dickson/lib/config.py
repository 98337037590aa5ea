import os

from appdirs import user_data_dir

# Largest supported prime
max_prime = 13

# Degree cap of the freeness scans
degree_bound = int(os.environ.get("DICKSON_DEGREE_BOUND", 24))

# Iteration cap of the rewriting engines before falling back to linear algebra
rewrite_steps = int(os.environ.get("DICKSON_REWRITE_STEPS", 10 ** 6))

# Seed and sample count of the randomized property runs
default_seed = int(os.environ.get("DICKSON_SEED", 1729))
default_samples = int(os.environ.get("DICKSON_SAMPLES", 20))

# Version tag of every JSON document the cli emits
schema_version = "dickson/1"

# Data dir
data_dir = os.environ.get("DICKSON_HOME", user_data_dir("dickson"))
if not os.path.exists(data_dir):
    os.makedirs(data_dir)

# Persisted expansions of named generators
expansion_cache_file = os.path.join(data_dir, "expansions.msgpack")
