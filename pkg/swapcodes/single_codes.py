"""
This module implements codes correcting a single transposition.

There are two constructions:
1) syndrome code over arbitrary alphabet, where codewords satisfy
   two weighted checksums modulo `2q - 1` and modulo `p`;
2) binary code of even length, where even-indexed symbols form
   a codeword of a single-substitution-correcting code and
   one more weighted checksum is fixed modulo 2.

Author: Nikolay Lysenko
"""


import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import sympy

from swapcodes import settings, utils
from swapcodes.metric import Code
from swapcodes.qstring import QaryString, swap_locations


logger = logging.getLogger(__name__)


def smallest_valid_prime(q: int, n: int) -> int:
    """Find the least odd prime that is not less than `max(q, n)`."""
    if q < 2 or n < 1:
        raise ValueError(f"Invalid alphabet size {q} or length {n}")
    return max(sympy.nextprime(max(q, n) - 1), 3)


def _check_modulus(p: int, q: int, n: int) -> None:
    # Modulus must be at least the length and make differences invertible.
    if p < max(3, n):
        raise ValueError(f"Modulus {p} is less than length {n}")
    for m in range(2, max(2, q - 1) + 1):
        if math.gcd(p, m) != 1:
            raise ValueError(
                f"Modulus {p} is not coprime with {m}, so "
                f"some symbol differences are not invertible"
            )


@dataclass(frozen=True)
class SyndromeParams:
    """
    Parameters of the syndrome code.

    Any modulus `p` that is not less than `n` and is coprime with all
    numbers from 2 to `max(2, q - 1)` is accepted; by default, the least
    odd prime not less than `max(q, n)` is used.

    :param q:
        alphabet size
    :param n:
        length of codewords
    :param s1:
        residue of the first checksum modulo `2q - 1`
    :param s2:
        residue of the second checksum modulo `p`
    :param p:
        modulus of the second checksum
    """

    q: int
    n: int
    s1: int = 0
    s2: int = 0
    p: Optional[int] = None

    def __post_init__(self):
        """Validate fields and fill modulus."""
        if self.p is None:
            object.__setattr__(
                self, 'p', smallest_valid_prime(self.q, self.n)
            )
        if self.q < 2 or self.n < 1:
            raise ValueError(f"Invalid q={self.q} or n={self.n}")
        _check_modulus(self.p, self.q, self.n)
        if not 0 <= self.s1 < 2 * self.q - 1:
            raise ValueError(f"s1={self.s1} is not in [0, {2 * self.q - 1})")
        if not 0 <= self.s2 < self.p:
            raise ValueError(f"s2={self.s2} is not in [0, {self.p})")


def syndromes(symbols: Sequence[int], q: int, p: int) -> Tuple[int, int]:
    """Compute both weighted checksums of a string."""
    first = sum(i * x for i, x in enumerate(symbols, 1)) % (2 * q - 1)
    second = sum(i * i * x for i, x in enumerate(symbols, 1)) % p
    return first, second


def _check_string(x: QaryString, q: int, n: int) -> None:
    # Strings must belong to the space of the code.
    if x.q != q or len(x) != n:
        raise ValueError(
            f"String {x} (q={x.q}, n={len(x)}) does not match "
            f"code parameters q={q}, n={n}"
        )


def is_codeword_q(x: QaryString, params: SyndromeParams) -> bool:
    """
    Check that a string satisfies both congruences.

    :param x:
        string
    :param params:
        parameters of the syndrome code
    :return:
        `True` if `x` is a codeword, `False` else
    """
    _check_string(x, params.q, params.n)
    return syndromes(x.symbols, params.q, params.p) == (params.s1, params.s2)


def enumerate_code_q(
        params: SyndromeParams, force: bool = False, quiet: bool = False
) -> Code:
    """
    List all codewords of the syndrome code.

    :param params:
        parameters of the syndrome code
    :param force:
        if it is `True`, size of the space is not checked against the limit
    :param quiet:
        if it is `True`, empty code is reported at debug level only
    :return:
        code; it is empty for some offsets and this is only logged
    """
    q, n = params.q, params.n
    utils.check_instance_size(
        'space', q ** n, settings.get_max_space_size(), force
    )
    target = (params.s1, params.s2)
    codewords = [
        x for x in utils.all_strings(q, n)
        if syndromes(x, q, params.p) == target
    ]
    if not codewords:
        level = logging.DEBUG if quiet else logging.WARNING
        logger.log(level, f"Syndrome code with {params} is empty.")
    return Code.from_symbols(q, n, codewords)


def best_offsets(
        q: int, n: int, p: Optional[int] = None, force: bool = False
) -> Tuple[int, int, int]:
    """
    Find residues that maximize cardinality of the syndrome code.

    :param q:
        alphabet size
    :param n:
        length of codewords
    :param p:
        modulus; by default, the least valid odd prime
    :param force:
        if it is `True`, size of the space is not checked against the limit
    :return:
        `s1`, `s2`, and the corresponding number of codewords; ties are
        broken in favor of lexicographically smaller residues
    """
    p = p or smallest_valid_prime(q, n)
    utils.check_instance_size(
        'space', q ** n, settings.get_max_space_size(), force
    )
    counts = Counter(syndromes(x, q, p) for x in utils.all_strings(q, n))
    (s1, s2), size = min(
        counts.items(), key=lambda item: (-item[1], item[0])
    )
    return s1, s2, size


def decode_q(y: QaryString, params: SyndromeParams) -> QaryString:
    """
    Correct at most one transposition in a string.

    :param y:
        string obtained from a codeword by at most one transposition
    :param params:
        parameters of the syndrome code
    :return:
        codeword
    """
    _check_string(y, params.q, params.n)
    q, p = params.q, params.p
    first, second = syndromes(y.symbols, q, p)
    c1 = (params.s1 - first) % (2 * q - 1)
    if c1 == 0:
        if second != params.s2:
            raise utils.UncorrectableInputError(
                f"{y} has zero first syndrome but is not a codeword"
            )
        return y
    # Residues 1, ..., q-1 stand for positive differences, the rest
    # stand for negative ones.
    difference = c1 if c1 <= q - 1 else c1 - (2 * q - 1)
    c2 = (params.s2 - second) % p
    inverse_of_two = pow(2, -1, p)
    inverse_of_difference = pow(difference % p, -1, p)
    k = inverse_of_two * (c2 * inverse_of_difference - 1) % p
    if not 1 <= k <= params.n - 1:
        raise utils.UncorrectableInputError(
            f"recovered location {k} is out of range for {y}"
        )
    x = QaryString(q, swap_locations(y.symbols, [k]))
    if not is_codeword_q(x, params):
        raise utils.UncorrectableInputError(
            f"swap at location {k} does not turn {y} into a codeword"
        )
    return x


@dataclass(frozen=True)
class ShortenedHammingCode:
    """
    Binary code of arbitrary length correcting one substitution.

    Position `i` (1-based) has parity-check column equal to binary
    representation of `i`, so syndrome of a word with one flipped bit
    is the index of this bit. Positions that are powers of two carry
    parity bits and the others carry data bits. For lengths below 3,
    the only codeword is the all-zero word.

    :param length:
        length of codewords
    """

    length: int
    data_positions: Tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        """Validate length and place data bits."""
        if self.length < 1:
            raise ValueError(f"Length must be positive, got {self.length}")
        data_positions = tuple(
            i for i in range(1, self.length + 1) if i & (i - 1) != 0
        )
        object.__setattr__(self, 'data_positions', data_positions)

    @property
    def dimension(self) -> int:
        """Get number of data bits."""
        return len(self.data_positions)

    def syndrome(self, word: Sequence[int]) -> int:
        """Compute XOR of indices of nonzero positions."""
        result = 0
        for i, bit in enumerate(word, 1):
            if bit:
                result ^= i
        return result

    def contains(self, word: Sequence[int]) -> bool:
        """Check that a word is a codeword."""
        return len(word) == self.length and self.syndrome(word) == 0

    def encode(self, data: Sequence[int]) -> Tuple[int, ...]:
        """
        Map data bits to a codeword.

        :param data:
            bits to be placed to non-parity positions
        :return:
            codeword
        """
        if len(data) != self.dimension:
            raise ValueError(
                f"Expected {self.dimension} data bits, got {len(data)}"
            )
        word = [0] * self.length
        for position, bit in zip(self.data_positions, data):
            word[position - 1] = bit
        parity = self.syndrome(word)
        bit_index = 0
        while (1 << bit_index) <= self.length:
            word[(1 << bit_index) - 1] = (parity >> bit_index) & 1
            bit_index += 1
        return tuple(word)

    def decode(
            self, word: Sequence[int]
    ) -> Tuple[Tuple[int, ...], Optional[int]]:
        """
        Find the nearest codeword assuming at most one flipped bit.

        :param word:
            received word
        :return:
            codeword and 1-based index of the flipped bit (`None` if
            the word is a codeword itself)
        """
        syndrome = self.syndrome(word)
        if syndrome == 0:
            return tuple(word), None
        if syndrome > self.length:
            raise utils.UncorrectableInputError(
                f"word {word} is not within Hamming distance 1 of a codeword"
            )
        fixed = list(word)
        fixed[syndrome - 1] ^= 1
        return tuple(fixed), syndrome

    def codewords(self) -> List[Tuple[int, ...]]:
        """List all codewords in lexicographic order."""
        return sorted(
            self.encode(data)
            for data in utils.all_strings(2, self.dimension)
        )


def inner_code(m: int) -> ShortenedHammingCode:
    """Create binary code of length `m` correcting one substitution."""
    return ShortenedHammingCode(m)


@dataclass(frozen=True)
class BinaryParams:
    """
    Parameters of the binary code.

    :param n:
        even length of codewords
    :param s:
        residue of weighted checksum modulo 2
    :param inner:
        code containing even-indexed halves of codewords;
        by default, shortened Hamming code of length `n / 2`
    """

    n: int
    s: int = 0
    inner: Optional[ShortenedHammingCode] = None

    def __post_init__(self):
        """Validate fields and fill inner code."""
        if self.n < 2 or self.n % 2 != 0:
            raise ValueError(f"Length must be even and positive, got {self.n}")
        if self.s not in (0, 1):
            raise ValueError(f"Checksum residue must be a bit, got {self.s}")
        if self.inner is None:
            object.__setattr__(self, 'inner', inner_code(self.n // 2))
        if self.inner.length != self.n // 2:
            raise ValueError(
                f"Inner code length {self.inner.length} is not {self.n // 2}"
            )


def weighted_parity(symbols: Sequence[int]) -> int:
    """Compute sum of `i * (x_{2i} - x_{2i-1})` modulo 2."""
    return sum(
        i * (symbols[2 * i - 1] - symbols[2 * i - 2])
        for i in range(1, len(symbols) // 2 + 1)
    ) % 2


def is_codeword_binary(x: QaryString, params: BinaryParams) -> bool:
    """
    Check membership in the binary code.

    :param x:
        binary string of even length
    :param params:
        parameters of the binary code
    :return:
        `True` if `x` is a codeword, `False` else
    """
    if len(x) % 2 != 0:
        raise ValueError(f"Binary code is defined for even lengths only: {x}")
    _check_string(x, 2, params.n)
    even_half = x.symbols[1::2]
    return (
        params.inner.contains(even_half)
        and weighted_parity(x.symbols) == params.s
    )


def enumerate_code_binary(params: BinaryParams) -> Code:
    """
    List all codewords of the binary code.

    :param params:
        parameters of the binary code
    :return:
        code
    """
    half = params.n // 2
    codewords = []
    for even_half in params.inner.codewords():
        for odd_half in utils.all_strings(2, half):
            symbols = [0] * params.n
            symbols[1::2] = even_half
            symbols[0::2] = odd_half
            if weighted_parity(symbols) == params.s:
                codewords.append(symbols)
    return Code.from_symbols(2, params.n, codewords)


def best_binary_offset(
        n: int, inner: Optional[ShortenedHammingCode] = None
) -> Tuple[int, int]:
    """Find checksum residue maximizing size of the binary code."""
    sizes = [
        (len(enumerate_code_binary(BinaryParams(n, s, inner))), s)
        for s in (0, 1)
    ]
    size, s = max(sizes, key=lambda item: (item[0], -item[1]))
    return s, size


def decode_binary(y: QaryString, params: BinaryParams) -> QaryString:
    """
    Correct at most one transposition in a binary string.

    :param y:
        string obtained from a codeword by at most one transposition
    :param params:
        parameters of the binary code
    :return:
        codeword
    """
    _check_string(y, 2, params.n)
    even_half = y.symbols[1::2]
    if params.inner.contains(even_half):
        if weighted_parity(y.symbols) != params.s:
            raise utils.UncorrectableInputError(
                f"even half of {y} is a codeword, but checksum is wrong"
            )
        return y
    _, j = params.inner.decode(even_half)
    c = (params.s - weighted_parity(y.symbols)) % 2
    k = 2 * j - 1 + c
    if not 1 <= k <= params.n - 1:
        raise utils.UncorrectableInputError(
            f"recovered location {k} is out of range for {y}"
        )
    x = QaryString(2, swap_locations(y.symbols, [k]))
    if not is_codeword_binary(x, params):
        raise utils.UncorrectableInputError(
            f"swap at location {k} does not turn {y} into a codeword"
        )
    return x
