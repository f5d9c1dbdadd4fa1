"""
This script contains package-level settings (like refusal thresholds).

They are stored as closures, not as global variables, because it is
less error-prone.

Author: Nikolay Lysenko
"""


def get_max_space_size() -> int:
    """Get maximum number of strings that may be enumerated exhaustively."""
    return 2 ** 22


def get_max_ball_length() -> int:
    """Get maximum length of strings for descendant-map computations."""
    return 14


def get_max_search_space() -> int:
    """Get maximum number of vertices of a conflict graph to be searched."""
    return 2 ** 10


def get_tolerance() -> float:
    """Get absolute tolerance of continuous optimizations."""
    return 1e-9


def get_root_tolerance() -> float:
    """Get absolute tolerance of polynomial root finding."""
    return 1e-12


def get_grid_step() -> float:
    """Get step of dense grids that precede local refinement."""
    return 1e-4


def get_csv_precision() -> int:
    """Get number of decimal places of real numbers in CSV output."""
    return 9


def get_descendant_cache_size() -> int:
    """Get maximum number of descendant maps kept in memory."""
    return 2 ** 13


def get_seed() -> int:
    """Get seed of random choices made by verification suites."""
    return 0


def get_n_random_codes() -> int:
    """Get number of random codes sampled per length by verification."""
    return 30
