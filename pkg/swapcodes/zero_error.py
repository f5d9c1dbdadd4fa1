"""
This module implements codes correcting any number of transpositions.

Alphabet is split into two parts, A0 and A1. A codeword is a
concatenation of blocks `aaa`, `bbb`, `abbb`, `baaa`, `aabbbb`, and
`bbaaaa`, where `a` is from A0 and `b` is from A1 (symbols may differ
from block to block, but not within a block). Disjoint transpositions
never turn two distinct codewords into the same string.

Decoding goes through binary indicators: first, the string of part
labels is decoded with the binary version of the code and then
symbols are put in order within parts.

Author: Nikolay Lysenko
"""


import logging
import math
from dataclasses import dataclass
from typing import (
    Callable, Dict, List, Optional, Sequence, Set, Tuple
)

import numpy as np
from scipy.optimize import bisect

from swapcodes import settings, utils
from swapcodes.metric import Code
from swapcodes.qstring import QaryString, indicator


logger = logging.getLogger(__name__)

Block = Tuple[int, ...]


@dataclass(frozen=True)
class AlphabetPartition:
    """
    Partition of {0, ..., q-1} into two nonempty parts.

    :param first:
        symbols of A0
    :param second:
        symbols of A1
    """

    first: Tuple[int, ...]
    second: Tuple[int, ...]

    def __post_init__(self):
        """Validate fields."""
        first = tuple(sorted(self.first))
        second = tuple(sorted(self.second))
        object.__setattr__(self, 'first', first)
        object.__setattr__(self, 'second', second)
        if not first or not second:
            raise ValueError("Both parts of a partition must be nonempty")
        union = sorted(first + second)
        if union != list(range(len(union))):
            raise ValueError(
                f"Parts {first} and {second} do not split "
                f"{{0, ..., {len(union) - 1}}} into disjoint sets"
            )

    @classmethod
    def default(cls, q: int) -> 'AlphabetPartition':
        """Split alphabet into {0, ..., floor(q/2) - 1} and the rest."""
        if q < 2:
            raise ValueError(f"Alphabet size must be at least 2, got {q}")
        return cls(tuple(range(q // 2)), tuple(range(q // 2, q)))

    @classmethod
    def from_text(cls, text: str) -> 'AlphabetPartition':
        """Parse partition like '0,1|2,3'."""
        from swapcodes.user_input_processing import parse_partition
        return cls(*parse_partition(text))

    @property
    def q(self) -> int:
        """Get alphabet size."""
        return len(self.first) + len(self.second)

    @property
    def sizes(self) -> Tuple[int, int]:
        """Get sizes of both parts."""
        return len(self.first), len(self.second)

    def __str__(self) -> str:
        first = ','.join(str(symbol) for symbol in self.first)
        second = ','.join(str(symbol) for symbol in self.second)
        return f'{first}|{second}'


def block_set(partition: AlphabetPartition) -> List[Block]:
    """
    List all blocks that codewords are made of.

    :param partition:
        partition of alphabet
    :return:
        blocks sorted by length and then lexicographically
    """
    blocks = [(a, a, a) for a in partition.first]
    blocks.extend((b, b, b) for b in partition.second)
    for a in partition.first:
        for b in partition.second:
            blocks.extend([
                (a, b, b, b),
                (b, a, a, a),
                (a, a, b, b, b, b),
                (b, b, a, a, a, a),
            ])
    return sorted(blocks, key=lambda block: (len(block), block))


def count_D(q: int, n: int, sizes: Optional[Tuple[int, int]] = None) -> int:
    """
    Count codewords with the recurrence over the last block.

    :param q:
        alphabet size
    :param n:
        length of codewords
    :param sizes:
        sizes of A0 and A1; by default, floor(q/2) and ceil(q/2)
    :return:
        number of codewords
    """
    if n < 0:
        raise ValueError(f"Length must be nonnegative, got {n}")
    first_size, second_size = sizes or (q // 2, q - q // 2)
    if first_size + second_size != q:
        raise ValueError(f"Sizes {sizes} do not sum up to {q}")
    mixed = 2 * first_size * second_size
    counts = [1]
    for m in range(1, n + 1):
        value = q * counts[m - 3] if m >= 3 else 0
        value += mixed * (counts[m - 4] if m >= 4 else 0)
        value += mixed * (counts[m - 6] if m >= 6 else 0)
        counts.append(value)
    return counts[n]


@dataclass(frozen=True)
class ZeroErrorCodebook:
    """
    Code of a given length built from blocks over a partition.

    :param n:
        length of codewords
    :param partition:
        partition of alphabet
    """

    n: int
    partition: AlphabetPartition

    def __post_init__(self):
        """Validate length."""
        if self.n < 0:
            raise ValueError(f"Length must be nonnegative, got {self.n}")

    @classmethod
    def create(
            cls, q: int, n: int, partition: Optional[AlphabetPartition] = None
    ) -> 'ZeroErrorCodebook':
        """Create codebook, by default with the balanced partition."""
        partition = partition or AlphabetPartition.default(q)
        if partition.q != q:
            raise ValueError(f"Partition {partition} is not over alphabet {q}")
        return cls(n, partition)

    @property
    def q(self) -> int:
        """Get alphabet size."""
        return self.partition.q

    @property
    def blocks(self) -> List[Block]:
        """Get blocks of the code."""
        return block_set(self.partition)

    def count(self) -> int:
        """Count codewords without listing them."""
        return count_D(self.q, self.n, self.partition.sizes)

    def contains(self, x: QaryString) -> bool:
        """Check that a string is a concatenation of blocks."""
        if x.q != self.q or len(x) != self.n:
            return False
        blocks = set(self.blocks)
        # Entry `i` tells whether the suffix starting at `i` is parsable.
        parsable = [False] * self.n + [True]
        for i in range(self.n - 1, -1, -1):
            parsable[i] = any(
                parsable[i + length] and x.symbols[i:i + length] in blocks
                for length in (3, 4, 6)
                if i + length <= self.n
            )
        return parsable[0]

    def codewords(self, force: bool = False) -> Code:
        """List all codewords in lexicographic order."""
        return enumerate_D(self.q, self.n, self.partition, force)


def enumerate_D(
        q: int,
        n: int,
        partition: Optional[AlphabetPartition] = None,
        force: bool = False,
        quiet: bool = False
) -> Code:
    """
    List all concatenations of blocks of total length `n`.

    :param q:
        alphabet size
    :param n:
        length of codewords
    :param partition:
        partition of alphabet; by default, the balanced one
    :param force:
        if it is `True`, number of codewords is not checked against the limit
    :param quiet:
        if it is `True`, empty code is reported at debug level only
    :return:
        code
    """
    partition = partition or AlphabetPartition.default(q)
    if partition.q != q:
        raise ValueError(f"Partition {partition} is not over alphabet {q}")
    expected = count_D(q, n, partition.sizes)
    utils.check_instance_size(
        'zero-error code', expected, settings.get_max_space_size(), force
    )
    blocks = block_set(partition)
    layers: Dict[int, List[Block]] = {0: [()]}
    for m in range(1, n + 1):
        layers[m] = [
            prefix + block
            for block in blocks if len(block) <= m
            for prefix in layers[m - len(block)]
        ]
    codewords = set(layers[n])
    if len(codewords) != expected:
        raise RuntimeError(
            f"Block parsing is ambiguous: {len(codewords)} distinct strings "
            f"versus {expected} block sequences"
        )
    if not codewords:
        level = logging.DEBUG if quiet else logging.WARNING
        logger.log(level, f"No concatenation of blocks has length {n}.")
    logger.debug(f"Zero-error code for q={q}, n={n} has {expected} words.")
    return Code.from_symbols(q, n, codewords)


def _block_steps(
        y: Sequence[int], i: int, block: Block, j: int
) -> List[int]:
    # Positions of a block to be matched after its `j`-th symbol: the
    # symbol is either in place or swapped with the next one.
    steps = []
    if y[i + j] == block[j]:
        steps.append(j + 1)
    if (
            j + 1 < len(block)
            and y[i + j] == block[j + 1]
            and y[i + j + 1] == block[j]
    ):
        steps.append(j + 2)
    return steps


def _block_exits(
        y: Sequence[int], i: int, block: Block, start: int
) -> Set[Optional[int]]:
    # Match block placed at position `i` against `y` allowing swaps inside
    # the block and a swap of its last symbol with the next block. Exit
    # carry is `None` or the symbol that is moved into the next block.
    exits = set()
    length = len(block)
    stack = [start]
    while stack:
        j = stack.pop()
        if j == length:
            exits.add(None)
            continue
        stack.extend(_block_steps(y, i, block, j))
        if j == length - 1 and i + length < len(y):
            exits.add(block[j])
    return exits


class _SuffixTable:
    """
    Block sequences that turn into suffixes of a string.

    State is a position where a block starts and a symbol moved there
    from the previous block (if any). A block sequence is stored as an
    index of a pair of its first block and the index of the rest, so
    equal sequences have equal indices. At most two sequences are kept
    per state: it tells unique explanations from ambiguous ones.
    """

    def __init__(self, y: Sequence[int]):
        """Initialize an instance."""
        self.y = y
        self.links: List[Tuple[Block, int]] = [((), -1)]
        self.indices: Dict[Tuple[Block, int], int] = {}
        self.states: Dict[Tuple[int, Optional[int]], Tuple[int, ...]] = {
            (len(y), None): (0,)
        }

    def _intern(self, block: Block, tail: int) -> int:
        # Get index of a sequence, registering it if it is new.
        key = (block, tail)
        if key not in self.indices:
            self.indices[key] = len(self.links)
            self.links.append(key)
        return self.indices[key]

    def _continuations(
            self, i: int, carry: Optional[int], block: Block
    ) -> List[int]:
        # Sequences that start with `block` placed at position `i`.
        y = self.y
        start = 0
        if carry is not None:
            if block[0] != y[i - 1] or y[i] != carry:
                return []
            start = 1
        result = []
        for exit_carry in _block_exits(y, i, block, start):
            for tail in self.states.get((i + len(block), exit_carry), ()):
                result.append(self._intern(block, tail))
        return result

    def fill(self, i: int, carry: Optional[int], blocks: List[Block]) -> None:
        """Find sequences for a state after all states to the right."""
        found = []
        for block in blocks:
            found.extend(self._continuations(i, carry, block))
        kept = tuple(dict.fromkeys(found))[:2]
        if kept:
            self.states[(i, carry)] = kept

    def word(self, index: int) -> Block:
        """Concatenate blocks of a sequence."""
        result = []
        while index > 0:
            block, index = self.links[index]
            result.extend(block)
        return tuple(result)


def _explanations(
        y: Sequence[int], blocks_at: Callable[[int], List[Block]]
) -> List[Block]:
    # Find up to two block concatenations that turn into `y` after
    # disjoint transpositions. States are filled from right to left.
    n = len(y)
    table = _SuffixTable(y)
    carries = sorted(set(y))
    for i in range(n - 1, -1, -1):
        blocks = [block for block in blocks_at(i) if i + len(block) <= n]
        for carry in [None] + (carries if i > 0 else []):
            table.fill(i, carry, blocks)
    return [table.word(index) for index in table.states.get((0, None), ())]


def _unique_explanation(
        y: Sequence[int], blocks_at: Callable[[int], List[Block]], what: str
) -> Block:
    # Zero-error property guarantees at most one explanation.
    candidates = _explanations(y, blocks_at)
    if not candidates:
        raise utils.UncorrectableInputError(
            f"{what} can not be obtained from any codeword"
        )
    if len(candidates) > 1:
        raise RuntimeError(
            f"{what} is explained by several codewords"
        )
    return candidates[0]


def decode_zero_error(
        y: QaryString, codebook: ZeroErrorCodebook
) -> QaryString:
    """
    Recover codeword from string distorted by disjoint transpositions.

    :param y:
        received string
    :param codebook:
        zero-error code
    :return:
        transmitted codeword
    """
    partition = codebook.partition
    if y.q != codebook.q or len(y) != codebook.n:
        raise ValueError(
            f"String {y} does not belong to the space of length "
            f"{codebook.n} over alphabet {codebook.q}"
        )
    y_labels = indicator(y, partition.first).symbols
    binary_blocks = block_set(AlphabetPartition((0,), (1,)))
    x_labels = _unique_explanation(
        y_labels, lambda i: binary_blocks, f"indicator string of {y}"
    )
    logger.debug(f"Indicator string of {y} is decoded to {x_labels}.")

    blocks_by_labels: Dict[Block, List[Block]] = {}
    for block in codebook.blocks:
        labels = indicator(QaryString(codebook.q, block), partition.first)
        blocks_by_labels.setdefault(labels.symbols, []).append(block)

    def blocks_at(i: int) -> List[Block]:
        return [
            block
            for length in (3, 4, 6)
            for block in blocks_by_labels.get(x_labels[i:i + length], [])
        ]

    x = _unique_explanation(y.symbols, blocks_at, f"string {y}")
    return QaryString(codebook.q, x)


def characteristic_polynomial(
        sizes: Tuple[int, int]
) -> np.polynomial.Polynomial:
    """
    Build polynomial whose positive root is the growth rate of the code.

    :param sizes:
        sizes of A0 and A1
    :return:
        x^6 - q x^3 - 2 |A0| |A1| x^2 - 2 |A0| |A1|
    """
    first_size, second_size = sizes
    if first_size < 1 or second_size < 1:
        raise ValueError(f"Both parts must be nonempty, got sizes {sizes}")
    q = first_size + second_size
    mixed = 2 * first_size * second_size
    return np.polynomial.Polynomial([-mixed, 0, -mixed, -q, 0, 0, 1])


def lambda_q(q: int, sizes: Optional[Tuple[int, int]] = None) -> float:
    """
    Find the unique positive root of the characteristic polynomial.

    :param q:
        alphabet size
    :param sizes:
        sizes of A0 and A1; by default, floor(q/2) and ceil(q/2)
    :return:
        root found by bisection
    """
    if q < 2:
        raise ValueError(f"Alphabet size must be at least 2, got {q}")
    sizes = sizes or (q // 2, q - q // 2)
    if sum(sizes) != q:
        raise ValueError(f"Sizes {sizes} do not sum up to {q}")
    polynomial = characteristic_polynomial(sizes)
    # Polynomial is negative at 1 and positive at q + 1.
    root = bisect(
        lambda x: float(polynomial(x)), 1, q + 1,
        xtol=settings.get_root_tolerance()
    )
    # One Newton step brings residual down to rounding errors.
    derivative = polynomial.deriv()
    return float(root - polynomial(root) / derivative(root))


def zero_error_rate(q: int) -> float:
    """Get asymptotic rate of the zero-error code in bits per symbol."""
    return math.log2(lambda_q(q))


def half_log_rate(q: int) -> float:
    """Get rate of block-interleaving codes, half of log2(a * b)."""
    if q < 2:
        raise ValueError(f"Alphabet size must be at least 2, got {q}")
    return 0.5 * math.log2((q // 2) * (q - q // 2))


def finite_rate(q: int, n: int) -> float:
    """
    Compute rate of the zero-error code with the default partition.

    :param q:
        alphabet size
    :param n:
        length of codewords
    :return:
        binary logarithm of code size divided by `n`
    """
    if n < 1:
        raise ValueError(f"Rate is undefined for length {n}")
    size = count_D(q, n)
    if size == 0:
        raise ValueError(f"Zero-error code of length {n} is empty")
    return math.log2(size) / n
