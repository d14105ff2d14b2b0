"""
Constants and configuration defaults for GP Toolkit
"""

# Size caps (vertex counts)
CLIQUE_VERTEX_CAP = 1000
SOLVER_VERTEX_CAP = 400
LABELING_VERTEX_CAP = 100
EXHAUSTIVE_COVER_CAP = 12
ORACLE_VERTEX_CAP = 25

# Distances are stored as int16; larger diameters are rejected
MAX_DIAMETER = 2**15 - 1

# Default patch sizes used by the report
DEFAULT_GRID_PATCH = (6, 6)
DEFAULT_STRONG_PATCH = (8, 8)
DEFAULT_BORON_PATCH = (8, 8)
DEFAULT_GRID3_PATCH = (5, 5, 5)
DEFAULT_TORUS = (7, 7)

# Bounds claimed for products of cycles
TORUS_GP_LOWER = 7
TORUS_GP_UPPER = 9

# Small tori reported as computed values only
SMALL_TORUS_SIDES = (3, 4, 5, 6)

# Runtime defaults
DEFAULT_SEED = 20180101
DEFAULT_THREADS = 1
DEFAULT_TORUS_TIME_LIMIT = 300.0
DEFAULT_REPORT_TIME_LIMIT = 60.0
DEFAULT_OUTPUT_DIR = "./data/output"

# Property-trial sizes
MONOTONE_TRIALS = 10_000
ORACLE_TRIALS = 500

# Solver bookkeeping
TIME_CHECK_INTERVAL = 1024

# Exit codes
EXIT_OK = 0
EXIT_ERROR = 1
EXIT_LOWER_BOUND_ONLY = 2
EXIT_INTERRUPTED = 130

# File Naming
REPORT_PREFIX = "gp_report"
TIMESTAMP_FORMAT = "%Y%m%d_%H%M%S"

# Logging Configuration
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
DEFAULT_LOG_LEVEL = "INFO"
