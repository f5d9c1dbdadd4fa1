"""
This module counts strings and balls and evaluates rate bounds.

There are three groups of tools here:
1) exact counts with arbitrary-precision integers (strings with a given
   number of runs, totals of ball sizes, coefficients of the generating
   function of strings with effective transpositions);
2) bounds on ball sizes and on maximum cardinality of codes;
3) growth exponents (bits per symbol) and rate curves, where
   transpositions are allowed to be a constant fraction of length.

Author: Nikolay Lysenko
"""


import csv
import logging
import math
from dataclasses import astuple, dataclass
from typing import (
    Callable, List, NamedTuple, Optional, Sequence, TextIO, Union
)

import numpy as np
import sympy
from scipy.optimize import bisect, minimize_scalar
from scipy.special import entr, gammaln, logsumexp

from swapcodes import settings, utils
from swapcodes.metric import descendant_map, effective_sphere, metric_ball
from swapcodes.qstring import QaryString
from swapcodes.single_codes import ShortenedHammingCode, inner_code
from swapcodes.zero_error import half_log_rate, zero_error_rate


logger = logging.getLogger(__name__)

Number = Union[float, np.ndarray]


@dataclass(frozen=True)
class ExponentPoint:
    """
    Value of a growth exponent at a point.

    :param rho:
        ratio of number of transpositions to length
    :param value:
        exponent in bits per symbol
    """

    rho: float
    value: float


@dataclass(frozen=True)
class RateCurvePoint:
    """
    Lower bounds on achievable rate at a given relative distance.

    :param delta:
        ratio of minimum distance to length
    :param r_gv:
        rate of the Gilbert-Varshamov type bound
    :param r_zero_error:
        rate of the zero-error code
    :param r_half_log:
        rate of block-interleaving codes
    :param r_combined:
        maximum of the three rates above
    """

    delta: float
    r_gv: float
    r_zero_error: float
    r_half_log: float
    r_combined: float


class CardinalityBounds(NamedTuple):
    """Asymptotic envelopes of maximum cardinality of a code."""

    lower: float
    upper: float


# Counting of strings.

def entropy_q(q: int, x: float) -> float:
    """
    Compute q-ary entropy function.

    :param q:
        alphabet size
    :param x:
        argument from [0, 1]
    :return:
        -x log_q(x) - (1-x) log_q(1-x) + x log_q(q-1)
    """
    if not 0 <= x <= 1:
        raise ValueError(f"Entropy is defined on [0, 1], got {x}")
    if q < 2:
        raise ValueError(f"Alphabet size must be at least 2, got {q}")
    value = (entr(x) + entr(1 - x) + x * math.log(q - 1)) / math.log(q)
    return float(value)


def _binary_entropy(x: Number) -> Number:
    # Vectorized binary entropy with 0 log 0 = 0.
    return (entr(x) + entr(1 - x)) / math.log(2)


def count_strings_with_runs(q: int, n: int, r: int) -> int:
    """Count strings of length `n` over `q` symbols having `r` runs."""
    if not 1 <= r <= n:
        return 0
    return utils.binom(n - 1, r - 1) * q * (q - 1) ** (r - 1)


def run_count_exponent(q: int, rho: float) -> float:
    """
    Get growth rate of strings having at most `rho * n` runs.

    :param q:
        alphabet size
    :param rho:
        ratio of number of runs to length
    :return:
        limit of `(1/n) log_q` of the number of such strings
    """
    if not 0 <= rho <= 1:
        raise ValueError(f"Ratio must be in [0, 1], got {rho}")
    if rho < 1 - 1 / q:
        return entropy_q(q, rho)
    return 1.0


def log_run_count_prefix(q: int, n: int, rho: float) -> float:
    """
    Compute `log_q` of number of strings with at most `rho * n` runs.

    Terms are evaluated with log-gamma and summed with log-sum-exp, so
    large lengths are supported.

    :param q:
        alphabet size
    :param n:
        length of strings
    :param rho:
        ratio of number of runs to length
    :return:
        logarithm to base `q`
    """
    max_runs = int(math.floor(rho * n))
    if max_runs < 1:
        raise ValueError(f"No string of length {n} has at most {rho * n} runs")
    r = np.arange(1, min(max_runs, n) + 1)
    log_terms = (
        gammaln(n) - gammaln(r) - gammaln(n - r + 1)
        + math.log(q) + (r - 1) * math.log(q - 1)
    )
    return float(logsumexp(log_terms) / math.log(q))


# Bounds on ball sizes.

def ball_lower_bound(run: int, t: int) -> int:
    """
    Bound size of a disjoint ball from below with number of runs.

    :param run:
        number of runs of the center
    :param t:
        radius
    :return:
        lower bound on |B(x; t)|
    """
    if t < 0:
        raise ValueError(f"Radius must be nonnegative, got {t}")
    half = run // 2
    return sum(
        utils.binom(half, u) * utils.binom(half - 2 * u - 1, t - u)
        for u in range(t + 1)
    )


def ball_upper_bound(n: int, t: int) -> int:
    """Bound |B(x; t)| from above with number of disjoint patterns."""
    if t < 0:
        raise ValueError(f"Radius must be nonnegative, got {t}")
    return sum(utils.binom(n - s, s) for s in range(t + 1))


def _ball_size_function(
        x: Union[QaryString, int], force: bool
) -> Callable[[int], int]:
    # Exact ball sizes for a string, upper bounds for a bare length.
    if isinstance(x, QaryString):
        counts = list(descendant_map(x, force).entries.values())
        return lambda s: sum(count <= s for count in counts)
    return lambda s: ball_upper_bound(x, s)


def _bbar_terms(
        x: Union[QaryString, int], t: int, force: bool
) -> List[int]:
    # Terms of the two-step bound, one per number of second-step swaps.
    if t < 0:
        raise ValueError(f"Radius must be nonnegative, got {t}")
    ball_size = _ball_size_function(x, force)
    return [
        utils.binom(2 * (t - v), v) * ball_size(t - v)
        for v in range(2 * t // 3 + 1)
    ]


def bbar_upper_bound(
        x: Union[QaryString, int], t: int, force: bool = False
) -> int:
    """
    Bound size of a ball with respect to distance `d` from above.

    :param x:
        center of the ball (exact sizes of disjoint balls are used)
        or length of strings (upper bounds on them are used)
    :param t:
        radius
    :param force:
        if it is `True`, length of `x` is not checked against the limit
    :return:
        sum of C(2(t-v), v) |B(x; t-v)| over v from 0 to floor(2t/3)
    """
    return sum(_bbar_terms(x, t, force))


def bbar_upper_bound_max_form(
        x: Union[QaryString, int], t: int, force: bool = False
) -> int:
    """Bound |B̄(x; t)| with number of terms times the largest term."""
    terms = _bbar_terms(x, t, force)
    return len(terms) * max(terms)


def syndrome_pigeonhole_bound(q: int, n: int, p: int) -> float:
    """Get guaranteed size of the syndrome code with the best offsets."""
    return q ** n / ((2 * q - 1) * p)


def binary_pigeonhole_bound(
        n: int, inner: Optional[ShortenedHammingCode] = None
) -> int:
    """Get guaranteed size of the binary code with the best residue."""
    if n < 2 or n % 2 != 0:
        raise ValueError(f"Length must be even and positive, got {n}")
    inner = inner or inner_code(n // 2)
    return 2 ** inner.dimension * 2 ** (n // 2) // 2


def cardinality_bounds_t1(q: int, n: int) -> CardinalityBounds:
    """
    Evaluate asymptotic envelopes of optimal single-error codes.

    These expressions are valid only up to a factor tending to 1 as `n`
    grows, so they are not bounds for a fixed `n`.

    :param q:
        alphabet size
    :param n:
        length of codewords
    :return:
        lower and upper envelopes
    """
    if q < 2 or n < 1:
        raise ValueError(f"Invalid q={q} or n={n}")
    if q == 2:
        lower = 2 ** n / n
    else:
        lower = q ** n / ((2 * q - 1) * n)
    upper = q ** (n + 1) / ((q - 1) * n)
    return CardinalityBounds(lower, upper)


def _binary_lower_constant(t: int) -> float:
    # Constants known for binary codes correcting successive swaps.
    if t == 1:
        return 1 / 2
    if t == 2:
        return 1 / 3
    return 1 / (2 * t + 1)


def cardinality_bounds_t(q: int, n: int, t: int) -> CardinalityBounds:
    """
    Evaluate asymptotic envelopes of optimal `t`-error codes.

    :param q:
        alphabet size
    :param n:
        length of codewords
    :param t:
        number of transpositions, at least 1
    :return:
        lower and upper envelopes
    """
    if q < 2 or n < 1 or t < 1:
        raise ValueError(f"Invalid q={q}, n={n}, or t={t}")
    if q == 2:
        lower = _binary_lower_constant(t) * 2 ** (n + t) / n ** t
    else:
        lower = (
            math.factorial(2 * t) * q ** n
            / ((4 * t / 3 + 1) * n ** (2 * t))
        )
    upper = math.factorial(t) * q ** (n + t) / ((q - 1) ** t * n ** t)
    return CardinalityBounds(lower, upper)


# Totals of ball sizes.

def total_exact_count(q: int, n: int, r: int) -> int:
    """
    Count pairs of a string and its alteration by `r` effective swaps.

    The recursion looks at the last two symbols: either the last
    symbol is not involved in a transposition (q options) or the last
    two symbols are swapped and they are different (q(q-1) options).

    :param q:
        alphabet size
    :param n:
        length of strings
    :param r:
        number of effective transpositions
    :return:
        sum of |A(x; r)| over all strings `x`
    """
    if n < 0 or r < 0:
        return 0
    table = [[0] * (r + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for m in range(1, n + 1):
        for s in range(r + 1):
            value = q * table[m - 1][s]
            if m >= 2 and s >= 1:
                value += q * (q - 1) * table[m - 2][s - 1]
            table[m][s] = value
    return table[n][r]


def total_exact_count_closed_form(q: int, n: int, r: int) -> int:
    """Count the same as `total_exact_count` with a product formula."""
    if n < 0 or r < 0:
        return 0
    return utils.binom(n - r, r) * q ** (n - r) * (q - 1) ** r


def exact_count_profile_oracle(
        q: int, n: int, force: bool = False
) -> List[int]:
    """
    Count the same as `total_exact_count` for all `r` by listing strings.

    Sizes of A(x; r) depend only on positions where adjacent symbols of
    `x` differ, so spheres are listed once per such set of positions.

    :param q:
        alphabet size
    :param n:
        length of strings
    :param force:
        if it is `True`, size of the space is not checked against the limit
    :return:
        list where element `r` is sum of |A(x; r)| over all strings `x`
    """
    utils.check_instance_size(
        'space', q ** n, settings.get_max_space_size(), force
    )
    radii = range(n // 2 + 1)
    totals = [0 for _ in radii]
    sizes_by_boundaries = {}
    for symbols in utils.all_strings(q, n):
        boundaries = tuple(
            k for k in range(1, n) if symbols[k - 1] != symbols[k]
        )
        if boundaries not in sizes_by_boundaries:
            x = QaryString(q, symbols)
            sizes_by_boundaries[boundaries] = [
                len(effective_sphere(x, r)) for r in radii
            ]
        for r, size in enumerate(sizes_by_boundaries[boundaries]):
            totals[r] += size
    return totals


def total_exact_count_oracle(
        q: int, n: int, r: int, force: bool = False
) -> int:
    """Count the same as `total_exact_count` by listing all strings."""
    if n < 0 or r < 0 or 2 * r > n:
        return 0
    return exact_count_profile_oracle(q, n, force)[r]


def log2_total_exact_count(q: int, n: int, r: int) -> float:
    """
    Compute binary logarithm of `total_exact_count` with log-gamma.

    :param q:
        alphabet size
    :param n:
        length of strings
    :param r:
        number of effective transpositions
    :return:
        logarithm; minus infinity if the count is zero
    """
    if r < 0 or 2 * r > n:
        return -math.inf
    log_value = (
        gammaln(n - r + 1) - gammaln(r + 1) - gammaln(n - 2 * r + 1)
        + (n - r) * math.log(q) + r * math.log(q - 1)
    )
    return float(log_value / math.log(2))


def series_coefficients(q: int, n_max: int) -> List[List[int]]:
    """
    Expand generating function 1 / (1 - qz - q(q-1) z^2 u) into series.

    :param q:
        alphabet size
    :param n_max:
        maximum power of `z`
    :return:
        table where element [n][r] is coefficient of z^n u^r
    """
    z, u = sympy.symbols('z u')
    function = 1 / (1 - q * z - q * (q - 1) * z ** 2 * u)
    expansion = sympy.series(function, z, 0, n_max + 1).removeO()
    coefficients = sympy.Poly(sympy.expand(expansion), z, u).as_dict()
    table = [[0] * (n // 2 + 1) for n in range(n_max + 1)]
    for (n, r), value in coefficients.items():
        table[n][r] = int(value)
    return table


def total_ball_count(q: int, n: int, r: int, force: bool = False) -> int:
    """
    Sum sizes of disjoint balls of radius `r` over all strings.

    :param q:
        alphabet size
    :param n:
        length of strings
    :param r:
        radius
    :param force:
        if it is `True`, size of the space is not checked against the limit
    :return:
        sum of |B(x; r)|
    """
    utils.check_instance_size(
        'space', q ** n, settings.get_max_space_size(), force
    )
    total = 0
    for x in utils.all_strings(q, n):
        counts = descendant_map(QaryString(q, x), force).entries.values()
        total += sum(count <= r for count in counts)
    return total


def total_metric_ball_count(
        q: int, n: int, r: int, force: bool = False
) -> int:
    """
    Sum sizes of balls with respect to distance `d` over all strings.

    :param q:
        alphabet size
    :param n:
        length of strings
    :param r:
        radius
    :param force:
        if it is `True`, size of the space is not checked against the limit
    :return:
        sum of |B̄(x; r)|
    """
    utils.check_instance_size(
        'space', q ** n, settings.get_max_space_size(), force
    )
    return sum(
        len(metric_ball(QaryString(q, x), r, force))
        for x in utils.all_strings(q, n)
    )


# Growth exponents.

def _check_alphabet(q: int) -> None:
    # All exponents are defined for nontrivial alphabets only.
    if q < 2:
        raise ValueError(f"Alphabet size must be at least 2, got {q}")


def _alpha_values(q: int, rho: Number) -> Number:
    # Vectorized version of `alpha` without validation.
    ratio = np.asarray(rho) / (1 - np.asarray(rho))
    return (
        (1 - rho) * _binary_entropy(np.minimum(ratio, 1.0))
        + (1 - rho) * math.log2(q) + rho * math.log2(q - 1)
    )


def alpha(q: int, rho: float) -> float:
    """
    Get growth rate of total number of alterations by `rho * n` swaps.

    :param q:
        alphabet size
    :param rho:
        ratio of number of effective transpositions to length, from [0, 1/2]
    :return:
        exponent in bits per symbol
    """
    _check_alphabet(q)
    if not 0 <= rho <= 0.5:
        raise ValueError(f"Ratio must be in [0, 1/2], got {rho}")
    return float(_alpha_values(q, rho))


def rho_star(q: int) -> float:
    """Find the point where `alpha` attains its maximum."""
    _check_alphabet(q)
    return 0.5 * (1 - math.sqrt(q / (5 * q - 4)))


def numeric_rho_star(q: int) -> float:
    """Find maximum point of `alpha` with bounded scalar optimization."""
    _check_alphabet(q)
    result = minimize_scalar(
        lambda rho: -alpha(q, rho),
        bounds=(0, 0.5),
        method='bounded',
        options={'xatol': settings.get_tolerance()}
    )
    return float(result.x)


def _beta_values(q: int, rho: Number) -> Number:
    # Vectorized version of `beta` without validation.
    return _alpha_values(q, np.minimum(rho, rho_star(q)))


def beta(q: int, rho: float) -> float:
    """
    Get growth rate of total size of disjoint balls of radius `rho * n`.

    :param q:
        alphabet size
    :param rho:
        ratio of radius to length
    :return:
        exponent in bits per symbol
    """
    _check_alphabet(q)
    if rho < 0:
        raise ValueError(f"Ratio must be nonnegative, got {rho}")
    return float(_beta_values(q, rho))


def _bbar_objective(q: int, rho: float, lambda_: Number) -> Number:
    # Exponent of terms of the two-step bound with `lambda_ * n` swaps
    # at the first step.
    lambda_ = np.asarray(lambda_, dtype=float)
    safe = np.where(lambda_ > 0, lambda_, 1.0)
    ratio = np.clip((rho - lambda_) / (2 * safe), 0.0, 1.0)
    return 2 * lambda_ * _binary_entropy(ratio) + _beta_values(q, lambda_)


def beta_bar_upper(q: int, rho: float) -> float:
    """
    Bound growth rate of total size of balls with respect to `d`.

    Maximization over the share of the first step goes through a dense
    grid and then the best grid cell is refined by bounded optimization.

    :param q:
        alphabet size
    :param rho:
        ratio of radius to length, from [0, 1]
    :return:
        exponent in bits per symbol
    """
    _check_alphabet(q)
    if not 0 <= rho <= 1:
        raise ValueError(f"Ratio must be in [0, 1], got {rho}")
    if rho == 0:
        return math.log2(q)
    left, right = rho / 3, rho
    step = settings.get_grid_step()
    n_points = max(3, int(math.ceil((right - left) / step)))
    grid = np.linspace(left, right, n_points + 1)
    values = _bbar_objective(q, rho, grid)
    best_index = int(np.argmax(values))
    best_value = float(values[best_index])
    result = minimize_scalar(
        lambda lambda_: -float(_bbar_objective(q, rho, lambda_)),
        bounds=(grid[max(best_index - 1, 0)],
                grid[min(best_index + 1, len(grid) - 1)]),
        method='bounded',
        options={'xatol': settings.get_tolerance()}
    )
    return max(best_value, -float(result.fun))


def gv_rate(q: int, delta: float) -> float:
    """
    Get rate guaranteed by greedy selection at relative distance `delta`.

    :param q:
        alphabet size
    :param delta:
        ratio of minimum distance to length, from [0, 1]
    :return:
        rate in bits per symbol (negative values mean no guarantee)
    """
    return 2 * math.log2(q) - beta_bar_upper(q, delta)


def exponent_curve(
        function: Callable[[int, float], float],
        q: int,
        grid: Sequence[float]
) -> List[ExponentPoint]:
    """Evaluate an exponent like `alpha` or `gv_rate` over a grid."""
    return [ExponentPoint(float(rho), function(q, rho)) for rho in grid]


# Rate curves.

def rate_curve(q: int, grid: Sequence[float]) -> List[RateCurvePoint]:
    """
    Evaluate all lower bounds on rate over a grid of relative distances.

    :param q:
        alphabet size
    :param grid:
        points from [0, 1]
    :return:
        points of the curve
    """
    r_zero_error = zero_error_rate(q)
    r_half_log = half_log_rate(q)
    points = []
    for delta in grid:
        r_gv = gv_rate(q, delta)
        points.append(RateCurvePoint(
            float(delta), r_gv, r_zero_error, r_half_log,
            max(r_gv, r_zero_error, r_half_log)
        ))
    logger.debug(f"Rate curve for q={q} has {len(points)} points.")
    return points


def combined_rate(q: int, delta: float) -> RateCurvePoint:
    """Get the best of known lower bounds on rate at a single point."""
    if not 0 <= delta <= 1:
        raise ValueError(f"Relative distance must be in [0, 1], got {delta}")
    return rate_curve(q, [delta])[0]


def crossover_delta0(q: int) -> Optional[float]:
    """
    Find relative distance where greedy codes stop being the best.

    :param q:
        alphabet size
    :return:
        point where `gv_rate` meets the best rate of codes correcting
        all patterns; `None` if there is no such point in (0, 1)
    """
    target = max(zero_error_rate(q), half_log_rate(q))

    def gap(delta: float) -> float:
        return gv_rate(q, delta) - target

    if gap(0) <= 0 or gap(1) >= 0:
        logger.info(f"No crossover for q={q}.")
        return None
    return bisect(gap, 0, 1, xtol=1e-6)


def _format_row(values: Sequence[float]) -> List[str]:
    # Fixed-point format keeps output byte-stable.
    precision = settings.get_csv_precision()
    return [f'{value:.{precision}f}' for value in values]


def write_rate_curve(points: Sequence[RateCurvePoint], stream: TextIO) -> None:
    """
    Write rate curve as CSV.

    :param points:
        points of the curve
    :param stream:
        destination
    :return:
        None
    """
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(['delta', 'r_gv', 'r_zero_error', 'r_half_log',
                     'r_combined'])
    for point in points:
        writer.writerow(_format_row(astuple(point)))


def write_exponent_curve(
        points: Sequence[ExponentPoint], stream: TextIO, argument: str = 'rho'
) -> None:
    """Write values of an exponent as CSV with two columns."""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow([argument, 'value'])
    for point in points:
        writer.writerow(_format_row(astuple(point)))
