"""
This module parses textual inputs of the command-line interface.

Supported forms are:
1) strings and locations, e.g., '0,1,1,3,0';
2) alphabet partitions, e.g., '0,1|2,3';
3) grids of real numbers, e.g., '0:1:0.001';
4) parameters of constructions, e.g., '2,5,5,1,3' for `q,n,p,s1,s2`.

Author: Nikolay Lysenko
"""


from typing import List, Tuple

import numpy as np
import pyparsing as pp


def _make_integer() -> pp.ParserElement:
    # Nonnegative decimal integer converted to `int`.
    integer = pp.Word(pp.nums)
    integer.set_parse_action(lambda tokens: int(tokens[0]))
    return integer


def _make_list_of_integers() -> pp.ParserElement:
    # Comma-separated integers, possibly none of them.
    return pp.Optional(pp.delimited_list(_make_integer()))


def _parse(
        grammar: pp.ParserElement, text: str, what: str
) -> pp.ParseResults:
    # Run parser on the whole text and unify errors.
    try:
        return grammar.parse_string(text.strip(), parse_all=True)
    except pp.ParseException as e:
        raise ValueError(f"Invalid {what} '{text}': {e}") from e


def parse_symbols(text: str) -> Tuple[int, ...]:
    """
    Parse comma-separated decimal integers.

    :param text:
        text like '0,1,1,3,0'; empty text means empty sequence
    :return:
        parsed integers
    """
    grammar = _make_list_of_integers()
    return tuple(_parse(grammar, text, 'list of integers'))


def parse_partition(text: str) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Parse partition of an alphabet into two parts.

    :param text:
        text like '0,1|2,3'
    :return:
        two parts as sorted tuples
    """
    part = pp.Group(pp.delimited_list(_make_integer()))
    grammar = part + pp.Suppress('|') + part
    first, second = _parse(grammar, text, 'partition')
    return tuple(sorted(first)), tuple(sorted(second))


def parse_grid(text: str) -> List[float]:
    """
    Parse grid in the form 'start:stop:step' with both ends included.

    :param text:
        text like '0:1:0.001'
    :return:
        points of the grid
    """
    number = pp.pyparsing_common.number
    grammar = number + pp.Suppress(':') + number + pp.Suppress(':') + number
    start, stop, step = _parse(grammar, text, 'grid')
    if step <= 0 or stop < start:
        raise ValueError(f"Invalid grid '{text}': empty or infinite range")
    ratio = (stop - start) / step
    n_steps = int(round(ratio))
    if abs(ratio - n_steps) > 1e-9 * max(1.0, ratio):
        raise ValueError(
            f"Invalid grid '{text}': step does not divide the range"
        )
    return [float(x) for x in np.linspace(start, stop, n_steps + 1)]


def parse_parameters(text: str, names: List[str]) -> dict:
    """
    Parse comma-separated integer parameters of a construction.

    :param text:
        text like '2,5,5,1,3'
    :param names:
        names of parameters in the order of their appearance
    :return:
        mapping from names to values
    """
    values = parse_symbols(text)
    if len(values) != len(names):
        raise ValueError(
            f"Expected {len(names)} values for {','.join(names)}, "
            f"got '{text}'"
        )
    return dict(zip(names, values))
