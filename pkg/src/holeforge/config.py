"""Default caps and budgets, overridable via environment variables.

HOLEFORGE_VCAP   vertex cap applied by cap-guarded operations
HOLEFORGE_TIMEOUT  per-call exact-solver budget in seconds
"""

import os

# Hard ceiling on exhaustive catalog enumeration (graphs up to this many
# vertices). 9 is the largest size where the full catalog (274668 graphs)
# is still desk-scale.
ENUMERATION_CAP = 9

# Default vertex cap for niceness certification (all induced subgraphs get
# exact chi and omega).
NICE_CAP = 11

# Default vertex cap for perfect chromatic number (set-cover over perfect
# induced subgraphs; the 2^n inner loop dominates).
CHI_P_CAP = 24

# Default vertex cap for hereditary slack (max over induced subgraphs of
# n - alpha*omega).
SLACK_CAP = 10

# Default per-call budget for the exact clique / coloring solvers.
SOLVER_TIMEOUT = 60.0

# Induced-cycle enumeration stops after this many cycles and reports
# truncation rather than filling memory.
CYCLE_CAP = 10**6


def vertex_cap(default):
    """Resolve a vertex cap: HOLEFORGE_VCAP wins over the given default."""
    raw = os.environ.get("HOLEFORGE_VCAP")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"HOLEFORGE_VCAP must be an integer, got {raw!r}")
    if value <= 0:
        raise ValueError(f"HOLEFORGE_VCAP must be positive, got {value}")
    return value


def solver_timeout(default=None):
    """Resolve the solver budget: HOLEFORGE_TIMEOUT wins over the default."""
    if default is None:
        default = SOLVER_TIMEOUT
    raw = os.environ.get("HOLEFORGE_TIMEOUT")
    if raw is None:
        return default
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"HOLEFORGE_TIMEOUT must be a number, got {raw!r}")
    if value <= 0:
        raise ValueError(f"HOLEFORGE_TIMEOUT must be positive, got {value}")
    return value
