"""
Tests of codes correcting a single transposition.

Author: Nikolay Lysenko
"""


import unittest

from swapcodes import metric, single_codes, utils
from swapcodes.qstring import QaryString, swap_locations
from swapcodes.single_codes import (
    BinaryParams, ShortenedHammingCode, SyndromeParams
)


def make(text: str, q: int = 2) -> QaryString:
    """Create string from symbols written without separators."""
    return QaryString(q, tuple(int(symbol) for symbol in text))


class TestSyndromeParams(unittest.TestCase):
    """Tests of parameters of the syndrome code."""

    def test_smallest_valid_prime(self) -> None:
        """Test default modulus."""
        self.assertEqual(single_codes.smallest_valid_prime(2, 5), 5)
        self.assertEqual(single_codes.smallest_valid_prime(2, 1), 3)
        self.assertEqual(single_codes.smallest_valid_prime(2, 2), 3)
        self.assertEqual(single_codes.smallest_valid_prime(4, 8), 11)
        self.assertEqual(single_codes.smallest_valid_prime(8, 7), 11)

    def test_default_modulus(self) -> None:
        """Test that modulus is filled in."""
        self.assertEqual(SyndromeParams(3, 4).p, 5)

    def test_invalid_parameters(self) -> None:
        """Test rejection of invalid moduli and residues."""
        with self.assertRaises(ValueError):
            SyndromeParams(2, 5, p=4)
        with self.assertRaises(ValueError):
            SyndromeParams(2, 5, p=3)
        with self.assertRaises(ValueError):
            SyndromeParams(4, 5, p=9)
        with self.assertRaises(ValueError):
            SyndromeParams(2, 5, s1=3)
        with self.assertRaises(ValueError):
            SyndromeParams(2, 5, s2=5)


class TestSyndromeCode(unittest.TestCase):
    """Tests of membership, enumeration, and decoding."""

    def setUp(self) -> None:
        """Create parameters used by several tests."""
        self.params = SyndromeParams(2, 5, s1=1, s2=3, p=5)

    def test_syndromes(self) -> None:
        """Test weighted checksums."""
        self.assertEqual(single_codes.syndromes((0, 1, 1, 0, 1), 2, 5), (1, 3))
        self.assertEqual(single_codes.syndromes((1, 0, 1, 0, 1), 2, 5), (0, 0))

    def test_is_codeword(self) -> None:
        """Test membership check."""
        self.assertTrue(single_codes.is_codeword_q(make('01101'), self.params))
        self.assertFalse(
            single_codes.is_codeword_q(make('10101'), self.params)
        )
        with self.assertRaises(ValueError):
            single_codes.is_codeword_q(make('0110'), self.params)

    def test_decode_example(self) -> None:
        """Test correction of a transposition at the first location."""
        result = single_codes.decode_q(make('10101'), self.params)
        self.assertEqual(str(result), '0,1,1,0,1')

    def test_decode_codeword(self) -> None:
        """Test that codewords are returned unchanged."""
        x = make('01101')
        self.assertEqual(single_codes.decode_q(x, self.params), x)

    def test_uncorrectable_input(self) -> None:
        """Test that strings far from the code are reported."""
        with self.assertRaises(utils.UncorrectableInputError):
            single_codes.decode_q(make('00000'), self.params)

    def test_sizes_sum_to_space(self) -> None:
        """Test that codes with all offsets partition the space."""
        params = SyndromeParams(3, 4)
        total = 0
        for s1 in range(2 * params.q - 1):
            for s2 in range(params.p):
                code = single_codes.enumerate_code_q(
                    SyndromeParams(3, 4, s1, s2, params.p)
                )
                total += len(code)
        self.assertEqual(total, 3 ** 4)

    def test_best_offsets(self) -> None:
        """Test that the best offsets give the largest code."""
        s1, s2, size = single_codes.best_offsets(3, 4)
        code = single_codes.enumerate_code_q(SyndromeParams(3, 4, s1, s2))
        self.assertEqual(len(code), size)
        for other_s1 in range(5):
            for other_s2 in range(5):
                other = single_codes.enumerate_code_q(
                    SyndromeParams(3, 4, other_s1, other_s2)
                )
                self.assertTrue(len(other) <= size)

    def test_round_trips(self) -> None:
        """Test that every single transposition is corrected."""
        for q, n in [(2, 6), (3, 5), (4, 5)]:
            s1, s2, _ = single_codes.best_offsets(q, n)
            params = SyndromeParams(q, n, s1, s2)
            code = single_codes.enumerate_code_q(params)
            self.assertTrue(metric.corrects_t(code, 1))
            for x in code:
                for k in range(1, n):
                    y = QaryString(q, swap_locations(x.symbols, [k]))
                    self.assertEqual(single_codes.decode_q(y, params), x)

    def test_empty_code(self) -> None:
        """Test that empty code is logged loudly unless asked otherwise."""
        params = SyndromeParams(2, 2, s1=0, s2=1)
        with self.assertLogs('swapcodes.single_codes', level='WARNING'):
            self.assertEqual(len(single_codes.enumerate_code_q(params)), 0)
        with self.assertLogs('swapcodes.single_codes', level='DEBUG') as logs:
            single_codes.enumerate_code_q(params, quiet=True)
        self.assertEqual(
            [record.levelname for record in logs.records], ['DEBUG']
        )

    def test_space_limit(self) -> None:
        """Test that too large enumeration is refused."""
        with self.assertRaises(utils.InstanceTooLargeError):
            single_codes.enumerate_code_q(SyndromeParams(2, 23))


class TestShortenedHammingCode(unittest.TestCase):
    """Tests of `ShortenedHammingCode` class."""

    def test_repetition_case(self) -> None:
        """Test that length 3 gives repetition code."""
        self.assertEqual(
            ShortenedHammingCode(3).codewords(), [(0, 0, 0), (1, 1, 1)]
        )

    def test_short_lengths(self) -> None:
        """Test that lengths below 3 give only the all-zero word."""
        self.assertEqual(ShortenedHammingCode(1).codewords(), [(0,)])
        self.assertEqual(ShortenedHammingCode(2).codewords(), [(0, 0)])
        with self.assertRaises(ValueError):
            ShortenedHammingCode(0)

    def test_perfect_code(self) -> None:
        """Test that length 7 gives Hamming code with 16 codewords."""
        code = ShortenedHammingCode(7)
        self.assertEqual(code.dimension, 4)
        codewords = code.codewords()
        self.assertEqual(len(codewords), 16)
        self.assertTrue(all(code.contains(word) for word in codewords))

    def test_decode(self) -> None:
        """Test correction of every single flip."""
        code = ShortenedHammingCode(6)
        for word in code.codewords():
            self.assertEqual(code.decode(word), (word, None))
            for index in range(1, 7):
                received = list(word)
                received[index - 1] ^= 1
                self.assertEqual(code.decode(received), (word, index))

    def test_decode_failure(self) -> None:
        """Test that syndrome beyond length is reported."""
        with self.assertRaises(utils.UncorrectableInputError):
            ShortenedHammingCode(5).decode((0, 0, 1, 1, 0))

    def test_encode_checks_size(self) -> None:
        """Test that number of data bits is checked."""
        with self.assertRaises(ValueError):
            ShortenedHammingCode(7).encode((1, 0))


class TestBinaryCode(unittest.TestCase):
    """Tests of binary code of even length."""

    def test_invalid_parameters(self) -> None:
        """Test rejection of odd lengths and non-binary residues."""
        with self.assertRaises(ValueError):
            BinaryParams(5)
        with self.assertRaises(ValueError):
            BinaryParams(6, 2)
        with self.assertRaises(ValueError):
            BinaryParams(6, inner=ShortenedHammingCode(4))

    def test_weighted_parity(self) -> None:
        """Test checksum modulo 2."""
        self.assertEqual(single_codes.weighted_parity((0, 1, 0, 0, 0, 0)), 1)
        self.assertEqual(single_codes.weighted_parity((1, 0, 0, 0, 0, 0)), 1)
        self.assertEqual(single_codes.weighted_parity((0, 0, 1, 1, 0, 0)), 0)

    def test_decode_example(self) -> None:
        """Test correction of a transposition at the first location."""
        params = BinaryParams(6, 1)
        result = single_codes.decode_binary(make('010000'), params)
        self.assertEqual(str(result), '1,0,0,0,0,0')

    def test_best_binary_offset(self) -> None:
        """Test size of the best binary code of length 6."""
        self.assertEqual(single_codes.best_binary_offset(6), (0, 8))

    def test_short_inner_code(self) -> None:
        """Test code of length 4 with the all-zero inner code."""
        code = single_codes.enumerate_code_binary(BinaryParams(4, 0))
        self.assertEqual(
            [str(x) for x in code], ['0,0,0,0', '0,0,1,0']
        )

    def test_round_trips(self) -> None:
        """Test that every single transposition is corrected."""
        for n in [6, 8, 10]:
            for s in (0, 1):
                params = BinaryParams(n, s)
                code = single_codes.enumerate_code_binary(params)
                self.assertTrue(metric.corrects_t(code, 1))
                for x in code:
                    self.assertTrue(single_codes.is_codeword_binary(x, params))
                    for k in range(1, n):
                        y = QaryString(2, swap_locations(x.symbols, [k]))
                        self.assertEqual(
                            single_codes.decode_binary(y, params), x
                        )

    def test_odd_length_is_rejected(self) -> None:
        """Test membership check for odd lengths."""
        with self.assertRaises(ValueError):
            single_codes.is_codeword_binary(make('01011'), BinaryParams(6))


def main():
    """Run tests."""
    test_loader = unittest.TestLoader()
    suites_list = []
    testers = [
        TestSyndromeParams(),
        TestSyndromeCode(),
        TestShortenedHammingCode(),
        TestBinaryCode()
    ]
    for tester in testers:
        suite = test_loader.loadTestsFromModule(tester)
        suites_list.append(suite)
    overall_suite = unittest.TestSuite(suites_list)
    unittest.TextTestRunner().run(overall_suite)


if __name__ == '__main__':
    main()
