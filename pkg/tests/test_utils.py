"""
Tests of auxiliary functions.

Author: Nikolay Lysenko
"""


import unittest

from swapcodes import utils


class TestBinom(unittest.TestCase):
    """Tests of `binom` function."""

    def test_regular_values(self) -> None:
        """Test binomial coefficients with valid arguments."""
        self.assertEqual(utils.binom(5, 2), 10)
        self.assertEqual(utils.binom(7, 7), 1)
        self.assertEqual(utils.binom(30, 15), 155117520)

    def test_out_of_range_values(self) -> None:
        """Test that invalid combinations give zero."""
        self.assertEqual(utils.binom(3, 4), 0)
        self.assertEqual(utils.binom(-1, 1), 0)
        self.assertEqual(utils.binom(3, -1), 0)

    def test_choosing_nothing(self) -> None:
        """Test that choosing zero elements is one way even for negatives."""
        self.assertEqual(utils.binom(-3, 0), 1)
        self.assertEqual(utils.binom(0, 0), 1)


class TestInstanceSizeCheck(unittest.TestCase):
    """Tests of refusal of oversize computations."""

    def test_small_instance(self) -> None:
        """Test that instances within limit pass silently."""
        utils.check_instance_size('space', 10, 10)

    def test_refusal(self) -> None:
        """Test that oversize instance is refused with its size and limit."""
        with self.assertRaises(utils.InstanceTooLargeError) as context:
            utils.check_instance_size('space', 11, 10)
        self.assertEqual(context.exception.size, 11)
        self.assertEqual(context.exception.limit, 10)
        self.assertIn('limit 10', str(context.exception))
        self.assertIsInstance(context.exception, ValueError)

    def test_forced_run(self) -> None:
        """Test that forcing replaces refusal with a warning."""
        with self.assertLogs('swapcodes.utils', level='WARNING'):
            utils.check_instance_size('space', 11, 10, force=True)


class TestMiscellaneous(unittest.TestCase):
    """Tests of small helpers."""

    def test_uncorrectable_input_error(self) -> None:
        """Test message prefix of decoder errors."""
        error = utils.UncorrectableInputError('no codeword')
        self.assertEqual(str(error), 'uncorrectable input: no codeword')
        self.assertIsInstance(error, ValueError)

    def test_all_strings(self) -> None:
        """Test `all_strings` function."""
        result = list(utils.all_strings(2, 2))
        self.assertEqual(result, [(0, 0), (0, 1), (1, 0), (1, 1)])
        self.assertEqual(len(list(utils.all_strings(3, 4))), 81)
        self.assertEqual(list(utils.all_strings(3, 0)), [()])


def main():
    """Run tests."""
    test_loader = unittest.TestLoader()
    suites_list = []
    testers = [
        TestBinom(),
        TestInstanceSizeCheck(),
        TestMiscellaneous()
    ]
    for tester in testers:
        suite = test_loader.loadTestsFromModule(tester)
        suites_list.append(suite)
    overall_suite = unittest.TestSuite(suites_list)
    unittest.TextTestRunner().run(overall_suite)


if __name__ == '__main__':
    main()
