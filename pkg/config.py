"""
Configuration defaults
Values can be overridden through environment variables
"""

import os

# Output
DEFAULT_FORMAT = os.environ.get("ACN_FORMAT", "human")
LOG_LEVEL = os.environ.get("ACN_LOG_LEVEL", "WARNING")

# Induced structure defaults for the non-orthogonal case
DEFAULT_EPSILON = 1
DEFAULT_BRANCH = "lambda1"
BRANCHES = ("lambda1", "lambda2")

# Symbols used by the built-in examples: free parameters a, m, the square root
# of 3 as s, and the circle parameters t0, t2
CATALOG_SYMBOLS = ["a", "m", "s", "t0", "t2"]
CATALOG_RELATIONS = {
    "s": "3",
    "t2": "1 - t0^2",
}

# Randomized checks
RANDOM_SEED = 20081027
RANDOM_ALGEBRAS = 20

# Class labels taken from the literature; only F0 is certified by computation
UNVERIFIED_CLASS_NOTE = "defining conditions not stated; label is unverified metadata"
