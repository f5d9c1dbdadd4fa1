"""
Tests of codes correcting any number of transpositions.

Author: Nikolay Lysenko
"""


import math
import unittest

from swapcodes import metric, utils, zero_error
from swapcodes.qstring import QaryString, disjoint_patterns, swap_locations
from swapcodes.zero_error import AlphabetPartition, ZeroErrorCodebook


def make(text: str, q: int = 2) -> QaryString:
    """Create string from symbols written without separators."""
    return QaryString(q, tuple(int(symbol) for symbol in text))


class TestAlphabetPartition(unittest.TestCase):
    """Tests of `AlphabetPartition` class."""

    def test_default(self) -> None:
        """Test balanced partition."""
        partition = AlphabetPartition.default(5)
        self.assertEqual(partition.first, (0, 1))
        self.assertEqual(partition.second, (2, 3, 4))
        self.assertEqual(partition.sizes, (2, 3))
        self.assertEqual(str(partition), '0,1|2,3,4')
        self.assertEqual(AlphabetPartition.default(2).sizes, (1, 1))

    def test_from_text(self) -> None:
        """Test parsing of partitions."""
        partition = AlphabetPartition.from_text('3,0|2,1')
        self.assertEqual(partition.first, (0, 3))
        self.assertEqual(partition.q, 4)

    def test_invalid_partitions(self) -> None:
        """Test that only splits of the whole alphabet are accepted."""
        with self.assertRaises(ValueError):
            AlphabetPartition((0,), (2,))
        with self.assertRaises(ValueError):
            AlphabetPartition((0, 1), (1, 2))
        with self.assertRaises(ValueError):
            AlphabetPartition((), (0, 1))


class TestCounting(unittest.TestCase):
    """Tests of block sets and counts of codewords."""

    def test_binary_blocks(self) -> None:
        """Test all six blocks of the binary code."""
        blocks = zero_error.block_set(AlphabetPartition((0,), (1,)))
        self.assertEqual(
            blocks,
            [
                (0, 0, 0), (1, 1, 1), (0, 1, 1, 1), (1, 0, 0, 0),
                (0, 0, 1, 1, 1, 1), (1, 1, 0, 0, 0, 0)
            ]
        )
        self.assertEqual(
            len(zero_error.block_set(AlphabetPartition.default(4))), 20
        )

    def test_binary_counts(self) -> None:
        """Test recurrence for binary alphabet."""
        expected = [1, 0, 0, 2, 2, 0, 6, 8, 4, 16, 32, 24, 52]
        result = [zero_error.count_D(2, n) for n in range(13)]
        self.assertEqual(result, expected)

    def test_ternary_counts(self) -> None:
        """Test recurrence for ternary alphabet."""
        result = [zero_error.count_D(3, n, (1, 2)) for n in range(6, 10)]
        self.assertEqual(result, [13, 24, 16, 51])

    def test_invalid_sizes(self) -> None:
        """Test that sizes must sum up to alphabet size."""
        with self.assertRaises(ValueError):
            zero_error.count_D(4, 6, (1, 2))
        with self.assertRaises(ValueError):
            zero_error.count_D(2, -1)

    def test_enumeration_agrees_with_count(self) -> None:
        """Test that listed codewords are as many as counted."""
        for q, n in [(2, 9), (3, 7), (4, 6), (5, 6)]:
            code = zero_error.enumerate_D(q, n)
            self.assertEqual(len(code), zero_error.count_D(q, n))

    def test_binary_code_of_length_6(self) -> None:
        """Test explicit list of binary codewords."""
        code = ZeroErrorCodebook.create(2, 6).codewords()
        expected = [
            '000000', '000111', '001111', '110000', '111000', '111111'
        ]
        self.assertEqual(
            [''.join(str(s) for s in x) for x in code], expected
        )

    def test_empty_code(self) -> None:
        """Test that empty code is reported."""
        with self.assertLogs('swapcodes.zero_error', level='WARNING'):
            self.assertEqual(len(zero_error.enumerate_D(2, 5)), 0)

    def test_empty_code_quietly(self) -> None:
        """Test that empty code is reported at debug level on request."""
        with self.assertLogs('swapcodes.zero_error', level='DEBUG') as logs:
            self.assertEqual(
                len(zero_error.enumerate_D(2, 5, quiet=True)), 0
            )
        self.assertTrue(logs.records)
        self.assertTrue(
            all(record.levelname == 'DEBUG' for record in logs.records)
        )

    def test_size_limit(self) -> None:
        """Test that too large enumeration is refused."""
        with self.assertRaises(utils.InstanceTooLargeError):
            zero_error.enumerate_D(8, 30)


class TestCodebook(unittest.TestCase):
    """Tests of `ZeroErrorCodebook` class."""

    def test_contains(self) -> None:
        """Test membership check by parsing into blocks."""
        codebook = ZeroErrorCodebook.create(2, 6)
        self.assertTrue(codebook.contains(make('000111')))
        self.assertTrue(codebook.contains(make('110000')))
        self.assertFalse(codebook.contains(make('001011')))
        self.assertFalse(codebook.contains(make('000')))
        self.assertEqual(codebook.count(), 6)

    def test_contains_long_word(self) -> None:
        """Test membership of a codeword made of 500 blocks."""
        codebook = ZeroErrorCodebook.create(2, 1500)
        x = QaryString(2, (0, 0, 0, 1, 1, 1) * 250)
        self.assertTrue(codebook.contains(x))
        y = QaryString(2, (0, 0, 1, 0, 1, 1) * 250)
        self.assertFalse(codebook.contains(y))

    def test_wrong_partition(self) -> None:
        """Test that partition must be over the same alphabet."""
        with self.assertRaises(ValueError):
            ZeroErrorCodebook.create(4, 6, AlphabetPartition((0,), (1, 2)))

    def test_indicators_form_binary_code(self) -> None:
        """Test that part labels of codewords are binary codewords."""
        partition = AlphabetPartition.default(4)
        code = zero_error.enumerate_D(4, 7)
        labels = {
            ''.join(str(s) for s in x.symbols)
            for x in (
                QaryString(2, [int(s in partition.second) for s in y])
                for y in code
            )
        }
        binary = {
            ''.join(str(s) for s in x.symbols)
            for x in zero_error.enumerate_D(2, 7)
        }
        self.assertEqual(labels, binary)

    def test_infinite_minimum_distance(self) -> None:
        """Test that descendants of distinct codewords never meet."""
        code = zero_error.enumerate_D(2, 10)
        self.assertEqual(metric.min_distance(code), metric.INFINITY)
        self.assertTrue(metric.corrects_t(code, 5))


class TestDecoding(unittest.TestCase):
    """Tests of `decode_zero_error` function."""

    def test_binary_example(self) -> None:
        """Test correction of a swap between two blocks."""
        codebook = ZeroErrorCodebook.create(2, 6)
        result = zero_error.decode_zero_error(make('001011'), codebook)
        self.assertEqual(str(result), '0,0,0,1,1,1')

    def test_quaternary_example(self) -> None:
        """Test that symbols are restored within parts."""
        codebook = ZeroErrorCodebook.create(4, 6)
        result = zero_error.decode_zero_error(make('003033', q=4), codebook)
        self.assertEqual(str(result), '0,0,0,3,3,3')

    def test_uncorrectable_input(self) -> None:
        """Test string that is not a descendant of a codeword."""
        codebook = ZeroErrorCodebook.create(2, 6)
        with self.assertRaises(utils.UncorrectableInputError):
            zero_error.decode_zero_error(make('010101'), codebook)

    def test_long_word(self) -> None:
        """Test correction of 250 swaps in a string of length 1500."""
        codebook = ZeroErrorCodebook.create(2, 1500)
        x = QaryString(2, (0, 0, 0, 1, 1, 1) * 250)
        pattern = [3 + 6 * k for k in range(250)]
        y = QaryString(2, swap_locations(x.symbols, pattern))
        self.assertEqual(y.symbols, (0, 0, 1, 0, 1, 1) * 250)
        self.assertEqual(zero_error.decode_zero_error(y, codebook), x)
        self.assertEqual(zero_error.decode_zero_error(x, codebook), x)

    def test_wrong_space(self) -> None:
        """Test that strings of other lengths are rejected."""
        codebook = ZeroErrorCodebook.create(2, 6)
        with self.assertRaises(ValueError):
            zero_error.decode_zero_error(make('0011'), codebook)

    def test_round_trips(self) -> None:
        """Test decoding after every disjoint pattern."""
        for q, n in [(2, 10), (3, 7), (4, 6)]:
            codebook = ZeroErrorCodebook.create(q, n)
            for x in codebook.codewords():
                for pattern in disjoint_patterns(n, n // 2):
                    y = QaryString(q, swap_locations(x.symbols, pattern))
                    self.assertEqual(
                        zero_error.decode_zero_error(y, codebook), x
                    )


class TestRates(unittest.TestCase):
    """Tests of growth rates."""

    def test_root_residual(self) -> None:
        """Test that the root solves the characteristic equation."""
        for q in range(2, 9):
            root = zero_error.lambda_q(q)
            polynomial = zero_error.characteristic_polynomial(
                (q // 2, q - q // 2)
            )
            self.assertTrue(abs(polynomial(root)) <= 1e-9)
            self.assertTrue(1 < root < q)

    def test_quaternary_root(self) -> None:
        """Test approximate value of the root for four symbols."""
        self.assertAlmostEqual(zero_error.lambda_q(4), 2.064, places=2)

    def test_comparison_with_half_log_rate(self) -> None:
        """Test that zero-error code wins only for small alphabets."""
        for q in range(2, 9):
            self.assertEqual(
                zero_error.zero_error_rate(q) > zero_error.half_log_rate(q),
                q <= 4
            )
        self.assertEqual(zero_error.half_log_rate(4), 1.0)

    def test_finite_rate(self) -> None:
        """Test rate of a short code."""
        self.assertAlmostEqual(
            zero_error.finite_rate(2, 6), math.log2(6) / 6
        )
        with self.assertRaises(ValueError):
            zero_error.finite_rate(2, 5)
        with self.assertRaises(ValueError):
            zero_error.finite_rate(2, 0)

    def test_finite_rate_converges(self) -> None:
        """Test that rate at length 600 is close to the growth rate."""
        for q in range(2, 5):
            self.assertTrue(
                abs(
                    zero_error.finite_rate(q, 600)
                    - zero_error.zero_error_rate(q)
                ) <= 0.02
            )

    def test_invalid_sizes(self) -> None:
        """Test that both parts must be nonempty."""
        with self.assertRaises(ValueError):
            zero_error.characteristic_polynomial((0, 3))
        with self.assertRaises(ValueError):
            zero_error.lambda_q(1)


def main():
    """Run tests."""
    test_loader = unittest.TestLoader()
    suites_list = []
    testers = [
        TestAlphabetPartition(),
        TestCounting(),
        TestCodebook(),
        TestDecoding(),
        TestRates()
    ]
    for tester in testers:
        suite = test_loader.loadTestsFromModule(tester)
        suites_list.append(suite)
    overall_suite = unittest.TestSuite(suites_list)
    unittest.TextTestRunner().run(overall_suite)


if __name__ == '__main__':
    main()
