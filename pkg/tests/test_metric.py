"""
Tests of distances, balls, and exhaustive code search.

Author: Nikolay Lysenko
"""


import itertools
import unittest

import numpy as np

from swapcodes import metric, utils
from swapcodes.metric import INFINITY, Code
from swapcodes.qstring import QaryString


def make(text: str, q: int = 2) -> QaryString:
    """Create string from symbols written without separators."""
    return QaryString(q, tuple(int(symbol) for symbol in text))


def texts(strings) -> list:
    """Print strings without separators."""
    return [''.join(str(symbol) for symbol in x) for x in strings]


class TestInfinity(unittest.TestCase):
    """Tests of `INFINITY` value."""

    def test_comparisons(self) -> None:
        """Test that infinity is above all integers."""
        self.assertTrue(5 < INFINITY)
        self.assertTrue(INFINITY > 10 ** 9)
        self.assertEqual(min(5, INFINITY), 5)
        self.assertEqual(max(5, INFINITY), INFINITY)
        self.assertNotEqual(INFINITY, float('inf'))
        self.assertEqual(str(INFINITY), 'inf')

    def test_arithmetic_is_undefined(self) -> None:
        """Test that infinity does not take part in arithmetic."""
        with self.assertRaises(TypeError):
            INFINITY + 1


class TestCode(unittest.TestCase):
    """Tests of `Code` class."""

    def test_sorting(self) -> None:
        """Test that codewords are sorted."""
        code = Code.from_symbols(2, 2, [(1, 1), (0, 0)])
        self.assertEqual(texts(code), ['00', '11'])
        self.assertIn(make('11'), code)
        self.assertNotIn(make('01'), code)

    def test_invalid_codes(self) -> None:
        """Test that duplicates and foreign strings are rejected."""
        with self.assertRaises(ValueError):
            Code.from_symbols(2, 2, [(0, 1), (0, 1)])
        with self.assertRaises(ValueError):
            Code.from_symbols(2, 2, [(0, 1, 1)])
        with self.assertRaises(ValueError):
            Code(2, 2, (make('01', q=3),))

    def test_empty_code(self) -> None:
        """Test that a code may have no codewords."""
        self.assertEqual(len(Code(2, 4, ())), 0)


class TestBalls(unittest.TestCase):
    """Tests of balls of all kinds."""

    def test_ball_disjoint(self) -> None:
        """Test ball of radius 1 around a short string."""
        result = metric.ball_disjoint(make('101'), 1)
        self.assertEqual(texts(result), ['011', '101', '110'])

    def test_radius_saturates(self) -> None:
        """Test that radius above n // 2 changes nothing."""
        x = make('0110', q=2)
        self.assertEqual(
            metric.ball_disjoint(x, 2), metric.ball_disjoint(x, 10)
        )

    def test_negative_radius(self) -> None:
        """Test that negative radius is rejected."""
        with self.assertRaises(ValueError):
            metric.ball_disjoint(make('01'), -1)

    def test_ball_successive(self) -> None:
        """Test that successive swaps may move a symbol twice."""
        result = metric.ball_successive(make('010'), 2)
        self.assertEqual(texts(result), ['001', '010', '100'])
        result = metric.ball_disjoint(make('100'), 2)
        self.assertEqual(texts(result), ['010', '100'])

    def test_metric_ball(self) -> None:
        """Test ball with respect to distance."""
        result = metric.metric_ball(make('100'), 1)
        self.assertEqual(texts(result), ['010', '100'])
        result = metric.metric_ball(make('100'), 2)
        self.assertEqual(texts(result), ['001', '010', '100'])

    def test_inclusions(self) -> None:
        """Test that disjoint ball lies in metric ball and in successive."""
        for symbols in utils.all_strings(3, 5):
            x = QaryString(3, symbols)
            for t in range(3):
                disjoint = set(metric.ball_disjoint(x, t))
                self.assertTrue(disjoint <= set(metric.metric_ball(x, t)))
                self.assertTrue(disjoint <= set(metric.ball_successive(x, t)))

    def test_effective_sphere(self) -> None:
        """Test strings obtained by swaps of unequal symbols only."""
        result = metric.effective_sphere(make('0101'), 1)
        self.assertEqual(texts(result), ['0011', '0110', '1001'])
        result = metric.effective_sphere(make('0101'), 2)
        self.assertEqual(texts(result), ['1010'])

    def test_clear_caches(self) -> None:
        """Test that cached descendant maps can be released."""
        metric.ball_disjoint(make('0110'), 1)
        metric.clear_caches()
        self.assertEqual(metric._descendants.cache_info().currsize, 0)
        self.assertEqual(len(metric.ball_disjoint(make('0110'), 1)), 3)

    def test_length_limit(self) -> None:
        """Test that too long strings are refused unless forced."""
        x = QaryString(2, (0,) * 15)
        with self.assertRaises(utils.InstanceTooLargeError):
            metric.descendant_map(x)
        with self.assertLogs('swapcodes.utils', level='WARNING'):
            self.assertEqual(len(metric.ball_disjoint(x, 1, force=True)), 1)


class TestDistances(unittest.TestCase):
    """Tests of distance functions."""

    def test_lower_bound_witnesses(self) -> None:
        """Test pairs at distance `n - 1`."""
        self.assertEqual(metric.distance(make('101010'), make('001011')), 5)
        self.assertEqual(metric.distance(make('10100'), make('00101')), 4)

    def test_triangle_inequality_fails(self) -> None:
        """Test that distance is not a metric."""
        x, y, z = make('1000'), make('0010'), make('0001')
        self.assertEqual(metric.distance(x, z), INFINITY)
        self.assertEqual(metric.distance(x, y), 2)
        self.assertEqual(metric.distance(y, z), 1)

    def test_successive_triangle_inequality(self) -> None:
        """Test that distance of the successive model is a metric."""
        classes = {}
        for symbols in utils.all_strings(2, 5):
            x = QaryString(2, symbols)
            classes.setdefault(sum(symbols), []).append(x)
        for members in classes.values():
            for x, y, z in itertools.product(members, repeat=3):
                self.assertTrue(
                    metric.distance_successive(x, z)
                    <= metric.distance_successive(x, y)
                    + metric.distance_successive(y, z)
                )

    def test_different_compositions(self) -> None:
        """Test that strings with different symbols are infinitely far."""
        self.assertEqual(metric.distance(make('01'), make('11')), INFINITY)

    def test_different_spaces(self) -> None:
        """Test that strings from different spaces are not compared."""
        with self.assertRaises(ValueError):
            metric.distance(make('01'), make('010'))
        with self.assertRaises(ValueError):
            metric.distance(make('01'), make('01', q=3))

    def test_transposition_distance(self) -> None:
        """Test distance without meeting in the middle."""
        x, y = make('100'), make('001')
        self.assertEqual(metric.transposition_distance(x, y), INFINITY)
        self.assertEqual(metric.distance(x, y), 2)
        self.assertEqual(metric.distance_successive(x, y), 2)
        self.assertEqual(
            metric.transposition_distance(make('0110'), make('1001')), 2
        )

    def test_order_of_distances(self) -> None:
        """Test that successive distance never exceeds `d` and `d'`."""
        for first, second in itertools.product(
                utils.all_strings(2, 5), repeat=2
        ):
            x, y = QaryString(2, first), QaryString(2, second)
            d = metric.distance(x, y)
            self.assertEqual(d, metric.distance(y, x))
            self.assertTrue(d <= metric.transposition_distance(x, y))
            self.assertTrue(metric.distance_successive(x, y) <= d)
            self.assertEqual(d == 0, x == y)

    def test_max_finite_distance(self) -> None:
        """Test that maximum finite distance is `n - 1`."""
        for n in range(2, 7):
            self.assertEqual(metric.max_finite_distance(2, n), n - 1)


class TestCodes(unittest.TestCase):
    """Tests of minimum distance, correction, and search."""

    def test_correction_with_small_distance(self) -> None:
        """Test code correcting 3 transpositions with distance 6."""
        code = Code(2, 10, (make('1010001010'), make('0011000011')))
        self.assertEqual(metric.min_distance(code), 6)
        self.assertTrue(metric.corrects_t(code, 3))
        self.assertFalse(metric.corrects_t(code, 4))

    def test_infinite_transposition_distance_is_not_enough(self) -> None:
        """Test that balls may meet even if codewords are not linked."""
        code = Code(2, 3, (make('100'), make('001')))
        self.assertFalse(metric.corrects_t(code, 1))
        self.assertTrue(metric.corrects_t(code, 0))

    def test_min_distance_of_tiny_code(self) -> None:
        """Test convention for codes with less than two codewords."""
        with self.assertLogs('swapcodes.metric', level='WARNING'):
            self.assertEqual(
                metric.min_distance(Code(2, 3, (make('101'),))), INFINITY
            )

    def test_successive_min_distance(self) -> None:
        """Test minimum distance of the successive model."""
        code = Code(2, 3, (make('100'), make('001')))
        self.assertEqual(metric.min_distance(code, 'successive'), 2)
        self.assertFalse(metric.corrects_t(code, 1, 'successive'))

    def test_large_min_distance_implies_correction(self) -> None:
        """Test random codes with minimum distance above `2 * t`."""
        rng = np.random.Generator(np.random.PCG64(0))
        strings = list(utils.all_strings(2, 6))
        for _ in range(30):
            indices = rng.choice(len(strings), size=4, replace=False)
            code = Code.from_symbols(2, 6, [strings[i] for i in indices])
            d = metric.min_distance(code)
            for t in range(4):
                if d > 2 * t:
                    self.assertTrue(metric.corrects_t(code, t))

    def test_successive_correction_criterion(self) -> None:
        """Test that pairs are separable iff they are more than 2t apart."""
        strings = list(utils.all_strings(2, 5))
        for x, y in itertools.combinations(strings, 2):
            code = Code.from_symbols(2, 5, [x, y])
            d = metric.min_distance(code, 'successive')
            for t in range(3):
                self.assertEqual(
                    metric.corrects_t(code, t, 'successive'), d > 2 * t
                )

    def test_greedy_code_covers_space(self) -> None:
        """Test that every string is close to a greedy codeword."""
        code = metric.greedy_code(2, 5, 1)
        covered = set()
        for x in code:
            covered.update(metric.metric_ball(x, 2))
        self.assertEqual(len(covered), 32)

    def test_optimal_code_search(self) -> None:
        """Test maximum cardinality for short binary strings."""
        result = metric.optimal_code_search(2, 3, 1)
        self.assertEqual(result.size, 4)
        self.assertTrue(metric.corrects_t(result.witness, 1))
        result = metric.optimal_code_search(2, 4, 0)
        self.assertEqual(result.size, 16)

    def test_search_space_limit(self) -> None:
        """Test that too large search is refused."""
        with self.assertRaises(utils.InstanceTooLargeError):
            metric.optimal_code_search(2, 11, 1)

    def test_greedy_code(self) -> None:
        """Test that greedy code corrects transpositions."""
        code = metric.greedy_code(2, 3, 1)
        self.assertEqual(len(code), 4)
        self.assertTrue(metric.corrects_t(code, 1))
        search = metric.optimal_code_search(2, 5, 1)
        self.assertTrue(len(metric.greedy_code(2, 5, 1)) <= search.size)


def main():
    """Run tests."""
    test_loader = unittest.TestLoader()
    suites_list = []
    testers = [
        TestInfinity(),
        TestCode(),
        TestBalls(),
        TestDistances(),
        TestCodes()
    ]
    for tester in testers:
        suite = test_loader.loadTestsFromModule(tester)
        suites_list.append(suite)
    overall_suite = unittest.TestSuite(suites_list)
    unittest.TextTestRunner().run(overall_suite)


if __name__ == '__main__':
    main()
