# -*- coding: UTF-8 -*-
"""
Constants shared by the exact and numeric layers and the CLI.
"""

# Logging
LOG_CALL_FMT_STR = "{name}({args}) -> {result} [{elapsed:.4f}s]"

# Environment
CACHE_DIR_ENV = "LAPLACE_CACHE_DIR"
LOG_LEVEL_ENV = "LAPLACE_LOG_LEVEL"
MP_DPS_ENV = "LAPLACE_MP_DPS"

DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_MP_DPS = 50

# Verification defaults
DEFAULT_LAMBDA_MIN = 10.0
DEFAULT_LAMBDA_MAX = 1000.0
DEFAULT_POINTS = 9
DEFAULT_VERIFY_TERMS = 6
DEFAULT_IGAMMA_GRID = (10, 20, 40, 80)

# An asymptotic remainder is accepted when it is no larger than this
# multiple of the first omitted term.
OMITTED_TERM_FACTOR = 2.0
ORDER_TOLERANCE = 0.15
# Orders are only asserted for these term counts; larger counts are
# reported but not judged.
CHECKED_LAPLACE_TERMS = (1, 2, 3, 4)
CHECKED_STIRLING_TERMS = (1, 2, 3, 4)
CHECKED_IGAMMA_TERMS = (1, 2, 3)

MIN_FIT_POINTS = 4
MIN_FIT_SPAN = 10.0
IGAMMA_FIT_SPAN = 8.0

# Quadrature
QUAD_REL_TOL = 1e-13
QUAD_MAX_INTERVALS = 4000
TAIL_CUT_RATIO = 1e-18

# Property sweeps
ROUTE_SWEEP_PROBLEMS = 200
RANDOM_PARAMETER_CHOICES = ("1/2", "1", "3/2", "2", "3")
RANDOM_COEFFICIENT_BOUND = 9
