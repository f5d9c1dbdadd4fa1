"""
It is just a small module for auxiliary tools.

Author: Nikolay Lysenko
"""


import itertools
import logging
import math
from typing import Iterator, Tuple

# Note that there must be no imports from other modules of the package,
# because all of them import this module.


logger = logging.getLogger(__name__)


class UncorrectableInputError(ValueError):
    """Error raised when a decoder receives a string it can not explain."""

    def __init__(self, details: str):
        """Initialize an instance."""
        super().__init__(f"uncorrectable input: {details}")


class InstanceTooLargeError(ValueError):
    """Error raised when exhaustive computation is refused."""

    def __init__(self, what: str, size: int, limit: int):
        """Initialize an instance."""
        super().__init__(
            f"{what} is too large: estimated size {size} exceeds "
            f"limit {limit} (pass `force` to run it anyway)"
        )
        self.size = size
        self.limit = limit


def check_instance_size(
        what: str, size: int, limit: int, force: bool = False
) -> None:
    """
    Refuse an oversize exhaustive computation unless it is forced.

    :param what:
        human-readable name of the computation
    :param size:
        estimated number of objects to be processed
    :param limit:
        maximum number of objects that is processed without forcing
    :param force:
        if it is `True`, oversize instance is only reported in logs
    :return:
        None
    """
    if size <= limit:
        return
    if not force:
        raise InstanceTooLargeError(what, size, limit)
    logger.warning(
        f"Forced run of {what}: size {size} exceeds limit {limit}, "
        f"expect long running time and high memory consumption."
    )


def binom(n: int, k: int) -> int:
    """
    Compute binomial coefficient with out-of-range arguments mapped to 0.

    Choosing zero elements is counted as one way even for negative `n`,
    all other invalid combinations give 0.
    """
    if k == 0:
        return 1
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def all_strings(q: int, n: int) -> Iterator[Tuple[int, ...]]:
    """Yield all strings of length `n` over {0, ..., q-1} in lex order."""
    return itertools.product(range(q), repeat=n)

