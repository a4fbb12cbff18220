"""Resource caps, overridable via GROUPGRAPHS_* environment variables."""

import os

_DEFAULTS = {
    "ORDER_CAP": 200_000,      # largest group build_group will construct
    "TABLE_CAP": 4_096,        # full Cayley table below this, hash backend above
    "LATTICE_CAP": 2_000,      # subgroup-lattice enumeration refuses above this
    "INDEPENDENCE_CAP": 256,   # independence-graph adjacency searches
    "ENUMERATION_CAP": 512,    # irredundant generating-set DFS
    "RANK_CAP": 10_000,        # d(G) computation with lattice shortcuts
    "GASCHUTZ_CAP": 10_000_000,  # |N|^k search-space bound
    "SLOT_T_CAP": 8,           # brute-force slot scans (3^t tuples)
    "CENSUS_T_CAP": 4,
}


def cap(name: str) -> int:
    """Return cap value, preferring GROUPGRAPHS_<name> from the environment."""
    env = os.environ.get(f"GROUPGRAPHS_{name}")
    if env is not None:
        return int(env)
    return _DEFAULTS[name]
