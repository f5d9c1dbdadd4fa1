"""
This module defines q-ary strings and transposition error patterns.

Locations of transpositions are 1-based everywhere in the public
interface: a transposition at location `k` swaps the `k`-th and
the `(k+1)`-th symbols of a string.

Author: Nikolay Lysenko
"""


import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple, Union

import numpy as np

from swapcodes import utils


class Model(enum.Enum):
    """Channel model, i.e., the way several transpositions are applied."""

    DISJOINT = 'disjoint'
    SUCCESSIVE = 'successive'


@dataclass(frozen=True, order=True)
class QaryString:
    """
    Immutable string over the alphabet {0, ..., q-1}.

    :param q:
        alphabet size, at least 2
    :param symbols:
        symbols of the string
    """

    q: int
    symbols: Tuple[int, ...]

    def __post_init__(self):
        """Validate fields."""
        if self.q < 2:
            raise ValueError(f"Alphabet size must be at least 2, got {self.q}")
        object.__setattr__(self, 'symbols', tuple(self.symbols))
        for symbol in self.symbols:
            if not 0 <= symbol < self.q:
                raise ValueError(
                    f"Symbol {symbol} is outside of alphabet "
                    f"{{0, ..., {self.q - 1}}}"
                )

    @classmethod
    def from_text(cls, text: str, q: int) -> 'QaryString':
        """Parse string like '0,1,1,3,0'."""
        # Imported here, because the parser module depends on this one.
        from swapcodes.user_input_processing import parse_symbols
        return cls(q, parse_symbols(text))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index: int) -> int:
        return self.symbols[index]

    def __str__(self) -> str:
        return ','.join(str(symbol) for symbol in self.symbols)


@dataclass(frozen=True)
class TranspositionPattern:
    """
    Locations of transpositions together with channel model.

    For the disjoint model, locations are strictly increasing and any two
    of them differ by at least 2. For the successive model, locations form
    an ordered sequence where repeats are allowed.

    :param locations:
        1-based transposition locations
    :param model:
        channel model
    """

    locations: Tuple[int, ...]
    model: Model = Model.DISJOINT

    def __post_init__(self):
        """Validate fields."""
        object.__setattr__(self, 'locations', tuple(self.locations))
        object.__setattr__(self, 'model', Model(self.model))
        if any(location < 1 for location in self.locations):
            raise ValueError(
                f"Locations must be positive, got {self.locations}"
            )
        if self.model is Model.DISJOINT:
            pairs = zip(self.locations, self.locations[1:])
            if any(second < first + 2 for first, second in pairs):
                raise ValueError(
                    f"Disjoint transpositions must be at least 2 apart, "
                    f"got {self.locations}"
                )

    def __len__(self) -> int:
        return len(self.locations)

    def __str__(self) -> str:
        return ','.join(str(location) for location in self.locations)

    def check_length(self, n: int) -> None:
        """Raise an error if a location is invalid for length `n`."""
        for location in self.locations:
            if location > n - 1:
                raise ValueError(
                    f"Location {location} is out of range "
                    f"{{1, ..., {n - 1}}} for length {n}"
                )


def run_count(x: QaryString) -> int:
    """
    Count maximal blocks of identical consecutive symbols.

    :param x:
        nonempty string
    :return:
        number of runs
    """
    if len(x) == 0:
        raise ValueError("Number of runs is undefined for empty string")
    return 1 + sum(a != b for a, b in zip(x.symbols, x.symbols[1:]))


def swap_locations(
        symbols: Sequence[int], locations: Sequence[int]
) -> Tuple[int, ...]:
    """Apply transpositions at 1-based locations one after another."""
    result = list(symbols)
    for location in locations:
        result[location - 1], result[location] = (
            result[location], result[location - 1]
        )
    return tuple(result)


def apply_disjoint(x: QaryString, p: TranspositionPattern) -> QaryString:
    """
    Apply simultaneous transpositions at disjoint locations.

    :param x:
        transmitted string
    :param p:
        pattern of the disjoint model
    :return:
        received string
    """
    if p.model is not Model.DISJOINT:
        raise ValueError("Pattern of the successive model is passed")
    p.check_length(len(x))
    return QaryString(x.q, swap_locations(x.symbols, p.locations))


def apply_successive(x: QaryString, seq: TranspositionPattern) -> QaryString:
    """
    Apply transpositions one after another in the order of the sequence.

    :param x:
        transmitted string
    :param seq:
        pattern of the successive model
    :return:
        received string
    """
    if seq.model is not Model.SUCCESSIVE:
        raise ValueError("Pattern of the disjoint model is passed")
    seq.check_length(len(x))
    return QaryString(x.q, swap_locations(x.symbols, seq.locations))


def apply_pattern(x: QaryString, p: TranspositionPattern) -> QaryString:
    """Apply pattern according to its own channel model."""
    if p.model is Model.DISJOINT:
        return apply_disjoint(x, p)
    return apply_successive(x, p)


def is_effective(x: QaryString, p: TranspositionPattern) -> bool:
    """Check that every transposition of a pattern swaps unequal symbols."""
    p.check_length(len(x))
    current = x.symbols
    for location in p.locations:
        if current[location - 1] == current[location]:
            return False
        current = swap_locations(current, [location])
    return True


def disjoint_patterns(
        n: int, max_count: int
) -> Iterator[Tuple[int, ...]]:
    """
    Yield all disjoint patterns with at most `max_count` locations.

    Patterns are ordered by size and lexicographically within a size.

    :param n:
        length of strings
    :param max_count:
        maximum number of transpositions
    :yield:
        1-based locations of transpositions
    """
    max_count = min(max_count, n // 2)
    for count in range(max_count + 1):
        # Subsets of {1, ..., n - count} are in one-to-one correspondence
        # with patterns: j-th smallest element is shifted by j - 1.
        for subset in itertools.combinations(range(1, n - count + 1), count):
            yield tuple(a + j for j, a in enumerate(subset))


def indicator(x: QaryString, first_part: Sequence[int]) -> QaryString:
    """
    Map string to binary string marking membership in the second part.

    :param x:
        q-ary string
    :param first_part:
        symbols mapped to 0, all other symbols are mapped to 1
    :return:
        binary indicator string
    """
    zeros = set(first_part)
    return QaryString(2, [int(symbol not in zeros) for symbol in x.symbols])


def random_pattern(
        n: int,
        t: int,
        model: Union[Model, str] = Model.DISJOINT,
        seed: int = 0
) -> TranspositionPattern:
    """
    Sample valid pattern with exactly `t` locations uniformly at random.

    Randomness comes from PCG64 generator of `numpy`, so the same
    arguments always give the same pattern.

    :param n:
        length of strings
    :param t:
        number of transpositions
    :param model:
        channel model
    :param seed:
        seed of random number generator
    :return:
        sampled pattern
    """
    model = Model(model)
    if t < 0:
        raise ValueError(f"Number of transpositions must be nonnegative: {t}")
    rng = np.random.Generator(np.random.PCG64(seed))
    if model is Model.DISJOINT:
        if t > n // 2:
            raise ValueError(
                f"At most {n // 2} disjoint transpositions fit into length {n}"
            )
        subset = sorted(rng.choice(n - t, size=t, replace=False) + 1)
        locations = [int(a) + j for j, a in enumerate(subset)]
    else:
        if t > 0 and n < 2:
            raise ValueError(f"No transposition fits into length {n}")
        locations = [int(k) for k in rng.integers(1, n, size=t)]
    return TranspositionPattern(tuple(locations), model)


def count_disjoint_patterns(n: int, s: int) -> int:
    """Count disjoint patterns with exactly `s` locations for length `n`."""
    return utils.binom(n - s, s) if n - s >= 0 else 0
