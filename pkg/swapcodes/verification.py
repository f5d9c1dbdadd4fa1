"""
This module runs exhaustive checks of properties of codes and bounds.

Every suite returns one result per property: its name, number of
checked instances, and verdict. Suites are deterministic, so identical
calls produce identical reports. Some properties are informational,
i.e., they compare values with asymptotic envelopes and never fail.

Author: Nikolay Lysenko
"""


import csv
import functools
import itertools
import logging
import math
from collections import Counter
from typing import (
    Callable, Collection, Dict, List, Mapping, NamedTuple, Sequence, TextIO
)

import numpy as np

from swapcodes import asymptotics, settings, utils
from swapcodes.metric import (
    INFINITY,
    Code,
    DistanceKind,
    ball_disjoint,
    ball_successive,
    clear_caches,
    corrects_t,
    distance,
    distance_successive,
    effective_sphere,
    greedy_code,
    max_finite_distance,
    metric_ball,
    min_distance,
    optimal_code_search,
    transposition_distance,
)
from swapcodes.qstring import (
    Model,
    QaryString,
    TranspositionPattern,
    apply_disjoint,
    apply_pattern,
    disjoint_patterns,
    indicator,
    is_effective,
    run_count,
)
from swapcodes.single_codes import (
    BinaryParams,
    SyndromeParams,
    best_offsets,
    decode_binary,
    decode_q,
    enumerate_code_binary,
    enumerate_code_q,
    smallest_valid_prime,
)
from swapcodes.zero_error import (
    AlphabetPartition,
    ZeroErrorCodebook,
    characteristic_polynomial,
    count_D,
    decode_zero_error,
    enumerate_D,
    finite_rate,
    half_log_rate,
    lambda_q,
    zero_error_rate,
)


logger = logging.getLogger(__name__)


class PropertyResult(NamedTuple):
    """Outcome of checking a property over a family of instances."""

    name: str
    instances: int
    passed: bool
    informational: bool = False

    @property
    def verdict(self) -> str:
        """Get human-readable verdict."""
        if self.instances == 0:
            return 'skip'
        if self.informational:
            return 'holds' if self.passed else 'violated'
        return 'pass' if self.passed else 'fail'


class _Property:
    """Accumulator of checks of a single property."""

    def __init__(self, name: str, informational: bool = False):
        """Initialize an instance."""
        self.name = name
        self.informational = informational
        self.instances = 0
        self.passed = True

    def check(self, condition: bool, details: str = '') -> None:
        """Register one instance."""
        self.instances += 1
        if not condition and self.passed:
            level = logging.INFO if self.informational else logging.WARNING
            logger.log(level, f"Property {self.name} fails: {details}")
        self.passed = self.passed and bool(condition)

    def result(self) -> PropertyResult:
        """Freeze accumulated state."""
        return PropertyResult(
            self.name, self.instances, self.passed, self.informational
        )


class _Checks:
    """Properties of a suite in the order of their appearance in reports."""

    def __init__(
            self,
            names: Mapping[str, str],
            informational: Collection[str] = ()
    ):
        """Initialize an instance."""
        self.properties = {
            key: _Property(name, key in informational)
            for key, name in names.items()
        }

    def __getitem__(self, key: str) -> _Property:
        return self.properties[key]

    def results(self) -> List[PropertyResult]:
        """Freeze all properties."""
        return [item.result() for item in self.properties.values()]


BALL_PROPERTIES = {
    'runs': 'ball_of_radius_one_has_run_count_elements',
    'lower': 'ball_lower_bound_by_runs',
    'upper': 'ball_upper_bound_by_patterns',
    'bbar': 'metric_ball_two_step_bound',
    'max_form': 'metric_ball_max_form_dominates_sum_form',
    'nested': 'disjoint_ball_within_metric_ball',
    'successive': 'metric_ball_within_successive_ball',
    'involution': 'apply_disjoint_is_involution',
    'multiset': 'apply_disjoint_preserves_symbol_multiset',
    'pattern_count': 'disjoint_pattern_count_is_binomial',
    'relabel': 'run_count_is_invariant_under_relabeling',
    'effective': 'effective_patterns_give_effective_sphere',
}

DISTANCE_PROPERTIES = {
    'symmetric': 'distance_is_symmetric',
    'zero': 'distance_is_zero_only_for_equal_strings',
    'below_transposition': 'distance_at_most_transposition_distance',
    'above_successive': 'successive_distance_at_most_distance',
    'maximum': 'maximum_finite_distance_is_length_minus_one',
    'triangle': 'successive_distance_satisfies_triangle_inequality',
    'random_codes': 'min_distance_above_2t_implies_correction',
    'successive_iff': 'successive_correction_iff_min_distance_above_2t',
    'greedy_distance': 'greedy_code_min_distance_above_2t',
    'greedy_covers': 'greedy_code_covers_space_with_metric_balls',
}

SINGLE_CODE_PROPERTIES = {
    'partition': 'syndrome_code_sizes_sum_to_space_size',
    'syndrome_corrects': 'syndrome_code_corrects_one_transposition',
    'syndrome_decodes': 'syndrome_decoder_recovers_codewords',
    'pigeonhole': 'syndrome_code_best_offsets_pigeonhole_bound',
    'successive': 'single_codes_correct_one_successive_swap',
    'binary_corrects': 'binary_code_corrects_one_transposition',
    'binary_decodes': 'binary_decoder_recovers_codewords',
    'binary_pigeonhole': 'binary_code_best_residue_pigeonhole_bound',
}

ZERO_ERROR_PROPERTIES = {
    'counts': 'recurrence_matches_enumeration',
    'infinite': 'minimum_distance_is_infinite',
    'decodes': 'decoder_recovers_codewords_from_any_pattern',
    'labels': 'indicators_form_binary_code',
    'root': 'growth_rate_is_root_of_polynomial',
    'convergence': 'finite_rate_converges_to_growth_rate',
    'comparison': 'zero_error_rate_beats_half_log_rate_iff_q_le_4',
}

COUNT_PROPERTIES = {
    'runs': 'run_counts_match_enumeration',
    'closed_form': 'exact_count_recursion_matches_closed_form',
    'series': 'exact_count_matches_series_coefficients',
    'oracle': 'exact_count_matches_effective_swaps',
    'sandwich': 'total_ball_count_between_exact_counts',
    'metric': 'total_metric_ball_count_dominates_total_ball_count',
}

BOUND_PROPERTIES = {
    'concave': 'alpha_is_concave',
    'argmax': 'rho_star_is_argmax_of_alpha',
    'alpha_limit': 'alpha_is_limit_of_exact_counts',
    'runs_limit': 'run_count_exponent_is_limit',
    'monotone_beta': 'beta_is_nondecreasing',
    'dominance': 'beta_bar_bound_dominates_beta',
    'monotone_gv': 'gv_rate_is_nonincreasing',
    'combined': 'combined_rate_is_maximum_of_components',
    'crossover': 'greedy_codes_are_overtaken_at_large_distance',
    'search': 'optimal_code_is_not_smaller_than_syndrome_code',
    'envelope': 'optimal_code_is_not_larger_than_upper_envelope',
}


def _check_caps(q: int, max_n: int, force: bool) -> None:
    # Every suite enumerates the whole space for the largest length.
    if q < 2 or max_n < 1:
        raise ValueError(f"Invalid q={q} or max_n={max_n}")
    utils.check_instance_size(
        'space', q ** max_n, settings.get_max_space_size(), force
    )


def _check_ball_caps(max_n: int, force: bool) -> None:
    # Descendant maps are built for the longest strings.
    utils.check_instance_size(
        'descendant map', max_n, settings.get_max_ball_length(), force
    )


def _max_radius(q: int) -> int:
    # Radii checked by ball suites.
    return 3 if q == 2 else 2


def _within_channel_caps(q: int, n: int) -> bool:
    # Checks of all patterns for all strings run at q <= 3 and n <= 8.
    return n <= 8 and q ** n <= 3 ** 8


def _relabelings(q: int) -> List[Sequence[int]]:
    # Transposition of 0 and 1 together with the cyclic shift generate
    # all permutations, so invariance under them over all strings means
    # invariance under any permutation.
    swap = (1, 0) + tuple(range(2, q))
    shift = tuple(range(1, q)) + (0,)
    return [swap, shift]


def _check_ball_sizes(checks: _Checks, x: QaryString, force: bool) -> None:
    # Sizes of balls versus run counts, bounds, and each other.
    run = run_count(x)
    checks['runs'].check(len(ball_disjoint(x, 1, force)) == run, str(x))
    for t in range(_max_radius(x.q) + 1):
        ball = ball_disjoint(x, t, force)
        checks['lower'].check(
            asymptotics.ball_lower_bound(run, t) <= len(ball)
        )
        checks['upper'].check(
            len(ball) <= asymptotics.ball_upper_bound(len(x), t)
        )
        metric = set(metric_ball(x, t, force))
        checks['nested'].check(set(ball) <= metric, f"{x}, t={t}")
        checks['successive'].check(metric <= set(ball_successive(x, t)))
        if t > 0:
            bound = asymptotics.bbar_upper_bound(x, t, force)
            checks['bbar'].check(len(metric) <= bound, f"{x}, t={t}")
            checks['max_form'].check(
                bound <= asymptotics.bbar_upper_bound_max_form(x, t, force)
            )


def _check_relabeling(checks: _Checks, x: QaryString) -> None:
    # Number of runs does not depend on names of symbols.
    for permutation in _relabelings(x.q):
        y = QaryString(x.q, tuple(permutation[a] for a in x.symbols))
        checks['relabel'].check(run_count(y) == run_count(x), str(x))


def _check_channel(
        checks: _Checks,
        x: QaryString,
        patterns: Sequence[TranspositionPattern]
) -> None:
    # Every disjoint pattern is applied to `x`.
    effective = {}
    for pattern in patterns:
        y = apply_disjoint(x, pattern)
        checks['involution'].check(
            apply_disjoint(y, pattern) == x, f"{x}, {pattern}"
        )
        checks['multiset'].check(sorted(y.symbols) == sorted(x.symbols))
        if is_effective(x, pattern):
            effective.setdefault(len(pattern), []).append(y)
    for r in range(len(x) // 2 + 1):
        checks['effective'].check(
            sorted(effective.get(r, [])) == effective_sphere(x, r),
            f"{x}, r={r}"
        )


def _check_pattern_counts(
        checks: _Checks, n: int, patterns: Sequence[TranspositionPattern]
) -> None:
    # Patterns with `s` locations are counted by C(n - s, s).
    sizes = Counter(len(pattern) for pattern in patterns)
    for s in range(n // 2 + 1):
        checks['pattern_count'].check(
            sizes[s] == utils.binom(n - s, s), f"n={n}, s={s}"
        )


def _check_strings_of_length(
        checks: _Checks, q: int, n: int, force: bool
) -> None:
    # Channel is checked with all patterns at the smallest lengths only.
    patterns = []
    if _within_channel_caps(q, n):
        patterns = [
            TranspositionPattern(locations)
            for locations in disjoint_patterns(n, n // 2)
        ]
        _check_pattern_counts(checks, n, patterns)
    for symbols in utils.all_strings(q, n):
        x = QaryString(q, symbols)
        _check_ball_sizes(checks, x, force)
        _check_relabeling(checks, x)
        if patterns:
            _check_channel(checks, x, patterns)


def verify_balls(
        q: int, max_n: int, force: bool = False
) -> List[PropertyResult]:
    """
    Check channel, sizes of balls, run counts, and bounds.

    :param q:
        alphabet size
    :param max_n:
        maximum length of strings
    :param force:
        if it is `True`, sizes are not checked against limits
    :return:
        results
    """
    _check_caps(q, max_n, force)
    _check_ball_caps(max_n, force)
    checks = _Checks(BALL_PROPERTIES)
    for n in range(1, max_n + 1):
        _check_strings_of_length(checks, q, n, force)
    return checks.results()


def _check_pairs(
        checks: _Checks, strings: Sequence[QaryString], force: bool
) -> None:
    # Relations between distances on all pairs of strings.
    for x, y in itertools.combinations_with_replacement(strings, 2):
        value = distance(x, y, force)
        checks['symmetric'].check(value == distance(y, x, force), f"{x}, {y}")
        checks['zero'].check((value == 0) == (x == y), f"{x}, {y}")
        checks['below_transposition'].check(
            value <= transposition_distance(x, y, force)
        )
        checks['above_successive'].check(distance_successive(x, y) <= value)


def _check_successive_triangle(
        checks: _Checks, strings: Sequence[QaryString]
) -> None:
    # Strings with different compositions are infinitely far from each
    # other, so only triples within a composition class are informative.
    classes = {}
    for x in strings:
        classes.setdefault(tuple(sorted(x.symbols)), []).append(x)
    for members in classes.values():
        table = {
            (x, y): distance_successive(x, y)
            for x, y in itertools.product(members, repeat=2)
        }
        for x, y, z in itertools.product(members, repeat=3):
            checks['triangle'].check(
                table[x, z] <= table[x, y] + table[y, z], f"{x}, {y}, {z}"
            )


def _check_successive_pairs(
        checks: _Checks, strings: Sequence[QaryString]
) -> None:
    # Codes with two codewords in the successive model.
    q, n = strings[0].q, len(strings[0])
    for x, y in itertools.combinations(strings, 2):
        code = Code(q, n, (x, y))
        value = min_distance(code, DistanceKind.SUCCESSIVE)
        for t in (1, 2):
            checks['successive_iff'].check(
                corrects_t(code, t, Model.SUCCESSIVE) == (value > 2 * t),
                f"{x}, {y}, t={t}"
            )


def _check_greedy_codes(checks: _Checks, q: int, n: int, force: bool) -> None:
    # Greedy codes are packings and coverings at the same time.
    for t in (1, 2):
        code = greedy_code(q, n, t, force)
        checks['greedy_distance'].check(
            min_distance(code, force=force) > 2 * t, f"n={n}, t={t}"
        )
        covered = set()
        for x in code:
            covered.update(metric_ball(x, 2 * t, force))
        checks['greedy_covers'].check(len(covered) == q ** n, f"n={n}")


def _check_random_codes(
        checks: _Checks,
        strings: Sequence[QaryString],
        rng: np.random.Generator,
        force: bool
) -> None:
    # Codes with large enough minimum distance correct transpositions.
    q, n = strings[0].q, len(strings[0])
    for _ in range(settings.get_n_random_codes()):
        size = int(rng.integers(2, min(4, len(strings)) + 1))
        indices = rng.choice(len(strings), size=size, replace=False)
        code = Code(q, n, tuple(strings[int(i)] for i in indices))
        value = min_distance(code, force=force)
        for t in (1, 2):
            if value > 2 * t:
                checks['random_codes'].check(
                    corrects_t(code, t, force=force),
                    ', '.join(str(x) for x in code)
                )


def _check_small_spaces(
        checks: _Checks,
        strings: Sequence[QaryString],
        rng: np.random.Generator,
        force: bool
) -> None:
    # Properties that involve triples of strings or families of codes.
    q, n = strings[0].q, len(strings[0])
    if q ** (3 * n) <= 2 ** 18:
        _check_successive_triangle(checks, strings)
    if q ** n <= 2 ** 6:
        _check_successive_pairs(checks, strings)
        _check_greedy_codes(checks, q, n, force)
        _check_random_codes(checks, strings, rng, force)


def verify_distances(
        q: int, max_n: int, force: bool = False
) -> List[PropertyResult]:
    """
    Check relations between distances and error correction by codes.

    Pairs of strings are enumerated only for lengths where their number
    is within the limit on space size. Triples of strings and families
    of codes are checked for even shorter lengths.

    :param q:
        alphabet size
    :param max_n:
        maximum length of strings
    :param force:
        if it is `True`, sizes are not checked against limits
    :return:
        results
    """
    _check_caps(q, max_n, force)
    checks = _Checks(DISTANCE_PROPERTIES)
    rng = np.random.Generator(np.random.PCG64(settings.get_seed()))
    for n in range(1, max_n + 1):
        if q ** (2 * n) > settings.get_max_space_size() and not force:
            logger.info(f"Pairs of strings of length {n} are skipped.")
            break
        checks['maximum'].check(
            max_finite_distance(q, n, force) == n - 1, f"n={n}"
        )
        strings = [QaryString(q, x) for x in utils.all_strings(q, n)]
        _check_pairs(checks, strings, force)
        _check_small_spaces(checks, strings, rng, force)
    return checks.results()


def _single_swaps(x: QaryString) -> List[QaryString]:
    # The string itself and all its alterations by one transposition.
    result = [x]
    for k in range(1, len(x)):
        result.append(apply_pattern(x, TranspositionPattern((k,))))
    return result


def _check_single_code(
        checks: _Checks,
        code: Code,
        decoder: Callable[[QaryString], QaryString],
        kind: str,
        force: bool
) -> None:
    # Correction of one transposition and decoding of all its outcomes.
    checks[f'{kind}_corrects'].check(corrects_t(code, 1, force=force))
    checks['successive'].check(corrects_t(code, 1, Model.SUCCESSIVE))
    for x in code:
        for y in _single_swaps(x):
            checks[f'{kind}_decodes'].check(decoder(y) == x, str(y))


def _check_syndrome_codes(
        checks: _Checks, q: int, n: int, force: bool
) -> None:
    # All offsets of the syndrome code of length `n`.
    p = smallest_valid_prime(q, n)
    total = 0
    for s1, s2 in itertools.product(range(2 * q - 1), range(p)):
        params = SyndromeParams(q, n, s1, s2, p)
        code = enumerate_code_q(params, force, quiet=True)
        total += len(code)
        if len(code) > 0:
            decoder = functools.partial(decode_q, params=params)
            _check_single_code(checks, code, decoder, 'syndrome', force)
    checks['partition'].check(total == q ** n, f"n={n}")
    _, _, size = best_offsets(q, n, p, force)
    checks['pigeonhole'].check(
        size >= asymptotics.syndrome_pigeonhole_bound(q, n, p), f"n={n}"
    )


def _check_binary_codes(checks: _Checks, n: int, force: bool) -> None:
    # Both residues of the binary code of length `n`.
    sizes = []
    for s in (0, 1):
        params = BinaryParams(n, s)
        code = enumerate_code_binary(params)
        sizes.append(len(code))
        decoder = functools.partial(decode_binary, params=params)
        _check_single_code(checks, code, decoder, 'binary', force)
    checks['binary_pigeonhole'].check(
        max(sizes) >= asymptotics.binary_pigeonhole_bound(n), f"n={n}"
    )


def verify_single_codes(
        q: int, max_n: int, force: bool = False
) -> List[PropertyResult]:
    """
    Check codes correcting one transposition and their decoders.

    :param q:
        alphabet size
    :param max_n:
        maximum length of codewords
    :param force:
        if it is `True`, sizes are not checked against limits
    :return:
        results
    """
    _check_caps(q, max_n, force)
    checks = _Checks(SINGLE_CODE_PROPERTIES)
    for n in range(2, max_n + 1):
        _check_syndrome_codes(checks, q, n, force)
        if q == 2 and n % 2 == 0:
            _check_binary_codes(checks, n, force)
    return checks.results()


def _check_zero_error_length(
        checks: _Checks, partition: AlphabetPartition, n: int, force: bool
) -> None:
    # Enumeration, distances, decoding, and indicators for length `n`.
    q = partition.q
    code = enumerate_D(q, n, partition, force, quiet=True)
    checks['counts'].check(len(code) == count_D(q, n), f"n={n}")
    if len(code) >= 2:
        checks['infinite'].check(min_distance(code, force=force) is INFINITY)
    codebook = ZeroErrorCodebook(n, partition)
    for x in code:
        for y in ball_disjoint(x, n // 2, force):
            checks['decodes'].check(
                decode_zero_error(y, codebook) == x, str(y)
            )
    binary_partition = AlphabetPartition((0,), (1,))
    binary_code = enumerate_D(2, n, binary_partition, force, quiet=True)
    indicators = {indicator(x, partition.first) for x in code}
    checks['labels'].check(indicators == set(binary_code), f"n={n}")


def _check_growth_rate(checks: _Checks, partition: AlphabetPartition) -> None:
    # Root of the polynomial, convergence to it, and comparison of rates.
    q = partition.q
    value = lambda_q(q)
    polynomial = characteristic_polynomial(partition.sizes)
    checks['root'].check(
        abs(float(polynomial(value))) <= settings.get_tolerance()
    )
    error = abs(finite_rate(q, 600) - math.log2(value))
    checks['convergence'].check(error <= 0.02, f"q={q}, error={error}")
    if q >= 3:
        better = zero_error_rate(q) > half_log_rate(q)
        checks['comparison'].check(better == (q <= 4), f"q={q}")


def verify_zero_error(
        q: int, max_n: int, force: bool = False
) -> List[PropertyResult]:
    """
    Check codes correcting all patterns of transpositions.

    :param q:
        alphabet size
    :param max_n:
        maximum length of codewords
    :param force:
        if it is `True`, sizes are not checked against limits
    :return:
        results
    """
    _check_caps(q, max_n, force)
    _check_ball_caps(max_n, force)
    partition = AlphabetPartition.default(q)
    checks = _Checks(ZERO_ERROR_PROPERTIES)
    for n in range(max_n + 1):
        _check_zero_error_length(checks, partition, n, force)
    _check_growth_rate(checks, partition)
    return checks.results()


def _check_run_counts(checks: _Checks, q: int, n: int) -> None:
    # Numbers of strings with a given number of runs.
    observed = Counter(
        run_count(QaryString(q, x)) for x in utils.all_strings(q, n)
    )
    checks['runs'].check(all(
        observed[r] == asymptotics.count_strings_with_runs(q, n, r)
        for r in range(1, n + 1)
    ), f"n={n}")


def _check_exact_counts(
        checks: _Checks,
        q: int,
        n: int,
        coefficients: Sequence[int],
        force: bool
) -> List[int]:
    # Three ways to count strings altered by effective swaps and brute force.
    oracle = asymptotics.exact_count_profile_oracle(q, n, force)
    exact = []
    for r in range(n // 2 + 1):
        value = asymptotics.total_exact_count(q, n, r)
        exact.append(value)
        checks['closed_form'].check(
            value == asymptotics.total_exact_count_closed_form(q, n, r)
        )
        checks['series'].check(value == coefficients[r], f"n={n}, r={r}")
        checks['oracle'].check(value == oracle[r], f"n={n}, r={r}")
    return exact


def _check_ball_totals(
        checks: _Checks, q: int, n: int, exact: Sequence[int], force: bool
) -> None:
    # Totals of ball sizes are between exact counts.
    for r in range(min(_max_radius(q), n // 2) + 1):
        total = asymptotics.total_ball_count(q, n, r, force)
        checks['sandwich'].check(
            max(exact[:r + 1]) <= total <= sum(exact[:r + 1]),
            f"n={n}, r={r}"
        )
        checks['metric'].check(
            asymptotics.total_metric_ball_count(q, n, r, force) >= total
        )


def verify_counts(
        q: int, max_n: int, force: bool = False
) -> List[PropertyResult]:
    """
    Check exact counting formulas against each other and brute force.

    Totals of ball sizes are computed for q <= 3 and n <= 8 only.

    :param q:
        alphabet size
    :param max_n:
        maximum length of strings
    :param force:
        if it is `True`, sizes are not checked against limits
    :return:
        results
    """
    _check_caps(q, max_n, force)
    _check_ball_caps(max_n, force)
    checks = _Checks(COUNT_PROPERTIES)
    table = asymptotics.series_coefficients(q, max_n)
    for n in range(1, max_n + 1):
        _check_run_counts(checks, q, n)
        exact = _check_exact_counts(checks, q, n, table[n], force)
        if q <= 3 and n <= 8:
            _check_ball_totals(checks, q, n, exact, force)
    return checks.results()


def _grid(start: float, stop: float, step: float) -> np.ndarray:
    # Grid with both ends included.
    return np.linspace(start, stop, int(round((stop - start) / step)) + 1)


def _check_alpha(checks: _Checks, q: int) -> None:
    # Shape of `alpha` and its maximum point.
    tolerance = settings.get_tolerance()
    alphas = [asymptotics.alpha(q, rho) for rho in _grid(0, 0.5, 1e-3)]
    for left, middle, right in zip(alphas, alphas[1:], alphas[2:]):
        checks['concave'].check(left + right - 2 * middle <= tolerance)
    checks['argmax'].check(
        abs(asymptotics.numeric_rho_star(q) - asymptotics.rho_star(q)) <= 1e-6
    )


def _check_limits(checks: _Checks, q: int) -> None:
    # Exponents are limits of exact counts at large lengths.
    n = 10 ** 4
    for rho in (0.1, 0.2, 0.3):
        rate = asymptotics.log2_total_exact_count(q, n, int(rho * n)) / n
        checks['alpha_limit'].check(
            abs(rate - asymptotics.alpha(q, rho)) <= 0.01, f"rho={rho}"
        )
    n = 5000
    for rho in (0.2, 1 - 1 / q, 0.9):
        rate = asymptotics.log_run_count_prefix(q, n, rho) / n
        checks['runs_limit'].check(
            abs(rate - asymptotics.run_count_exponent(q, rho)) <= 0.01,
            f"rho={rho}"
        )


def _check_beta(checks: _Checks, q: int) -> None:
    # Monotonicity of `beta` and dominance of the two-step bound.
    tolerance = settings.get_tolerance()
    betas = [asymptotics.beta(q, rho) for rho in _grid(0, 1, 1e-3)]
    for previous, current in zip(betas, betas[1:]):
        checks['monotone_beta'].check(current >= previous - tolerance)
    for rho in _grid(0, 1, 0.05):
        checks['dominance'].check(
            asymptotics.beta_bar_upper(q, rho)
            >= asymptotics.beta(q, rho) - tolerance
        )


def _check_rates(checks: _Checks, q: int) -> None:
    # Rate curve and its crossover.
    tolerance = settings.get_tolerance()
    points = asymptotics.rate_curve(q, _grid(0, 1, 0.01))
    for previous, current in zip(points, points[1:]):
        checks['monotone_gv'].check(current.r_gv <= previous.r_gv + tolerance)
    for point in points:
        checks['combined'].check(point.r_combined == max(
            point.r_gv, point.r_zero_error, point.r_half_log
        ))
    delta0 = asymptotics.crossover_delta0(q)
    checks['crossover'].check(delta0 is not None, f"q={q}")
    if delta0 is not None:
        logger.info(f"Crossover for q={q} is at {delta0:.6f}.")


def _check_search(checks: _Checks, q: int, max_n: int, force: bool) -> None:
    # Exact search is feasible only for the smallest lengths.
    for length in range(2, min(max_n, 8) + 1):
        if q ** length > settings.get_max_search_space() and not force:
            break
        optimum = optimal_code_search(q, length, 1, force=force)
        _, _, syndrome_size = best_offsets(q, length, force=force)
        envelope = asymptotics.cardinality_bounds_t1(q, length)
        logger.info(
            f"n={length}: optimum {optimum.size}, syndrome code "
            f"{syndrome_size}, envelopes {envelope.lower:.2f} and "
            f"{envelope.upper:.2f}."
        )
        checks['search'].check(syndrome_size <= optimum.size, f"n={length}")
        checks['envelope'].check(
            optimum.size <= envelope.upper, f"n={length}"
        )


def verify_bounds(
        q: int, max_n: int, force: bool = False
) -> List[PropertyResult]:
    """
    Check growth exponents and compare code sizes with envelopes.

    Envelopes are asymptotic, so comparison of exact optima with the
    upper envelope is reported, but it never fails a suite.

    :param q:
        alphabet size
    :param max_n:
        maximum length of codes found by exhaustive search
    :param force:
        if it is `True`, sizes are not checked against limits
    :return:
        results
    """
    _check_caps(q, max_n, force)
    checks = _Checks(BOUND_PROPERTIES, informational=['envelope'])
    _check_alpha(checks, q)
    _check_limits(checks, q)
    _check_beta(checks, q)
    _check_rates(checks, q)
    _check_search(checks, q, max_n, force)
    return checks.results()


SUITES: Dict[str, Callable[[int, int, bool], List[PropertyResult]]] = {
    'balls': verify_balls,
    'distances': verify_distances,
    'single_codes': verify_single_codes,
    'zero_error': verify_zero_error,
    'counts': verify_counts,
    'bounds': verify_bounds,
}


def run_suite(
        suite: str, q: int, max_n: int, force: bool = False
) -> List[PropertyResult]:
    """
    Run a suite by its name.

    Cached descendant maps are released after the suite.

    :param suite:
        name of a suite
    :param q:
        alphabet size
    :param max_n:
        maximum length
    :param force:
        if it is `True`, sizes are not checked against limits
    :return:
        results
    """
    if suite not in SUITES:
        raise ValueError(
            f"Unknown suite '{suite}', choose from {', '.join(SUITES)}"
        )
    logger.debug(f"Running suite {suite} with q={q}, max_n={max_n}.")
    try:
        return SUITES[suite](q, max_n, force)
    finally:
        clear_caches()


def write_report(results: Sequence[PropertyResult], stream: TextIO) -> None:
    """Write results as CSV with columns `property,instances,verdict`."""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(['property', 'instances', 'verdict'])
    for result in results:
        writer.writerow([result.name, result.instances, result.verdict])


def all_passed(results: Sequence[PropertyResult]) -> bool:
    """Check that no property fails."""
    return all(result.verdict != 'fail' for result in results)
