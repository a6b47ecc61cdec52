"""System-wide constants for enlattice.

Lattice bounds, search budgets and the reference counts that the census and
verification suites compare against.
"""

# Lattice bounds
MAX_LATTICE_RANK = 10  # blowup count accepted by make_lattice
MAX_ALGEBRA_RANK = 8  # E_n exists only up to here
MAX_WEYL_ORDER_RANK = 6  # full group generation beyond this is not desk scale

# Search budgets
DEFAULT_DGON_NODE_BUDGET = 2_000_000
DEFAULT_SAMPLE_COUNT = 100_000
DEFAULT_ORBIT_CAP = 100_000
DEFAULT_SEED = 20240601

# Numerical type of the three basic class kinds: (D.D, D.K)
LINE_QUERY = (-1, -1)
RULING_QUERY = (0, -2)
ROOT_QUERY = (-2, 0)

# Reference counts indexed by n
LINE_COUNTS = {1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}
RULING_COUNTS = {1: 1, 2: 2, 3: 3, 4: 5, 5: 10, 6: 27, 7: 126}
ROOT_COUNTS = {1: 0, 2: 2, 3: 8, 4: 20, 5: 40, 6: 72, 7: 126, 8: 240}
ALGEBRA_DIMENSIONS = {1: 1, 2: 4, 3: 11, 4: 24, 5: 45, 6: 78, 7: 133, 8: 248}
WEYL_GROUP_ORDERS = {4: 120, 5: 1920, 6: 51840}

# Dynkin type of the root system on K-perp
EXPECTED_TYPES = {
    2: "A1",
    3: "A2xA1",
    4: "A4",
    5: "D5",
    6: "E6",
    7: "E7",
    8: "E8",
}

# Output formats
OUTPUT_FORMATS = ("table", "json")
GRAPH_FORMATS = ("dot", "json")

# Exit codes
EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
