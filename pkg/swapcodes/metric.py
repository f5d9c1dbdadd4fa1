"""
This module computes distances and balls by exhaustive enumeration.

Descendants of a string are all strings that can be obtained from it by
disjoint transpositions. Both distance `d` and balls of all kinds are
derived from descendant maps, i.e., from mappings of descendants to the
minimum number of transpositions needed to reach them.

Author: Nikolay Lysenko
"""


import enum
import functools
import itertools
import logging
from collections import deque
from dataclasses import dataclass
from typing import (
    Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple,
    Union
)

import networkx as nx

from swapcodes import settings, utils
from swapcodes.qstring import (
    Model, QaryString, disjoint_patterns, swap_locations
)


logger = logging.getLogger(__name__)


class _Infinity:
    """Distance between strings without common descendants."""

    __instance = None

    def __new__(cls):
        """Return the only instance."""
        if cls.__instance is None:
            cls.__instance = super().__new__(cls)
        return cls.__instance

    def __repr__(self) -> str:
        return 'INFINITY'

    def __str__(self) -> str:
        return 'inf'

    def __hash__(self) -> int:
        return hash(float('inf'))

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __add__(self, other):
        raise TypeError("Arithmetic operations on INFINITY are not defined")

    __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = __add__


INFINITY = _Infinity()
DistanceValue = Union[int, _Infinity]


class DistanceKind(enum.Enum):
    """Distance function used for minimum distance of a code."""

    D = 'd'
    SUCCESSIVE = 'successive'


@dataclass(frozen=True)
class Code:
    """
    Set of strings of the same length over the same alphabet.

    Codewords are stored in lexicographic order. A code without codewords
    is allowed, because some constructions are empty for some parameters.

    :param q:
        alphabet size
    :param n:
        length of codewords
    :param codewords:
        distinct codewords
    """

    q: int
    n: int
    codewords: Tuple[QaryString, ...]

    def __post_init__(self):
        """Validate fields."""
        codewords = tuple(sorted(self.codewords))
        for first, second in zip(codewords, codewords[1:]):
            if first == second:
                raise ValueError(f"Codeword {first} is duplicated")
        for codeword in codewords:
            if codeword.q != self.q or len(codeword) != self.n:
                raise ValueError(
                    f"Codeword {codeword} does not belong to "
                    f"the space of length {self.n} over alphabet {self.q}"
                )
        object.__setattr__(self, 'codewords', codewords)

    @classmethod
    def from_symbols(
            cls, q: int, n: int, strings: Iterable[Iterable[int]]
    ) -> 'Code':
        """Create code from plain sequences of symbols."""
        return cls(q, n, tuple(QaryString(q, s) for s in strings))

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self) -> Iterator[QaryString]:
        return iter(self.codewords)

    def __contains__(self, x: QaryString) -> bool:
        return x in set(self.codewords)


@dataclass(frozen=True)
class DescendantMap:
    """
    Strings reachable by disjoint transpositions from an origin.

    :param origin:
        string that transpositions are applied to
    :param entries:
        mapping from reachable strings to the minimum number of
        transpositions needed to reach them
    """

    origin: QaryString
    entries: Mapping[QaryString, int]

    def ball(self, t: int) -> List[QaryString]:
        """Return descendants reachable by at most `t` transpositions."""
        return sorted(z for z, count in self.entries.items() if count <= t)


class SearchResult(NamedTuple):
    """Maximum cardinality of a code together with a code achieving it."""

    size: int
    witness: Code


def _check_ball_length(n: int, force: bool) -> None:
    # Descendant maps grow exponentially with length of strings.
    utils.check_instance_size(
        'descendant map', n, settings.get_max_ball_length(), force
    )


def _check_same_space(x: QaryString, y: QaryString) -> None:
    # Distances are defined only within the same space.
    if x.q != y.q or len(x) != len(y):
        raise ValueError(
            f"Strings {x} (q={x.q}) and {y} (q={y.q}) "
            f"belong to different spaces"
        )


@functools.lru_cache(maxsize=settings.get_descendant_cache_size())
def _descendants(symbols: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
    # Patterns come in increasing size, so the first hit is the minimum.
    result = {}
    for pattern in disjoint_patterns(len(symbols), len(symbols) // 2):
        result.setdefault(swap_locations(symbols, pattern), len(pattern))
    return result


def clear_caches() -> None:
    """Release memory occupied by cached descendant maps."""
    _descendants.cache_clear()


def _disjoint_ball(
        symbols: Tuple[int, ...], t: int
) -> List[Tuple[int, ...]]:
    # Plain-tuple version of `ball_disjoint`.
    return [z for z, count in _descendants(symbols).items() if count <= t]


def _neighbors(symbols: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    # Strings obtained by one swap of unequal adjacent symbols.
    for k in range(1, len(symbols)):
        if symbols[k - 1] != symbols[k]:
            yield swap_locations(symbols, [k])


def _successive_ball(
        symbols: Tuple[int, ...],
        t: int,
        target: Optional[Tuple[int, ...]] = None
) -> Dict[Tuple[int, ...], int]:
    # Breadth-first search over single effective swaps up to depth `t`;
    # it stops as soon as `target` is reached.
    depths = {symbols: 0}
    queue = deque([symbols])
    while queue and target not in depths:
        current = queue.popleft()
        if depths[current] == t:
            continue
        for neighbor in _neighbors(current):
            if neighbor not in depths:
                depths[neighbor] = depths[current] + 1
                queue.append(neighbor)
    return depths


def descendant_map(x: QaryString, force: bool = False) -> DescendantMap:
    """
    Find all strings reachable from `x` by disjoint transpositions.

    :param x:
        origin
    :param force:
        if it is `True`, length of `x` is not checked against the limit
    :return:
        descendant map of `x`
    """
    _check_ball_length(len(x), force)
    entries = {
        QaryString(x.q, z): count
        for z, count in _descendants(x.symbols).items()
    }
    return DescendantMap(x, entries)


def ball_disjoint(
        x: QaryString, t: int, force: bool = False
) -> List[QaryString]:
    """
    Find all strings obtainable from `x` by at most `t` disjoint swaps.

    :param x:
        center of the ball
    :param t:
        radius, values above n // 2 saturate
    :param force:
        if it is `True`, length of `x` is not checked against the limit
    :return:
        ball B(x; t) in lexicographic order
    """
    if t < 0:
        raise ValueError(f"Radius must be nonnegative, got {t}")
    return descendant_map(x, force).ball(t)


def ball_successive(x: QaryString, t: int) -> List[QaryString]:
    """
    Find all strings obtainable from `x` by at most `t` successive swaps.

    :param x:
        center of the ball
    :param t:
        radius
    :return:
        ball of the successive model in lexicographic order
    """
    if t < 0:
        raise ValueError(f"Radius must be nonnegative, got {t}")
    return sorted(QaryString(x.q, z) for z in _successive_ball(x.symbols, t))


def metric_ball(
        x: QaryString, t: int, force: bool = False
) -> List[QaryString]:
    """
    Find all strings `y` such that `distance(x, y)` is at most `t`.

    A string `y` is within distance `t` from `x` if and only if it is a
    descendant of a descendant of `x` with `t` transpositions in total.

    :param x:
        center of the ball
    :param t:
        radius
    :param force:
        if it is `True`, length of `x` is not checked against the limit
    :return:
        ball with respect to `distance` in lexicographic order
    """
    if t < 0:
        raise ValueError(f"Radius must be nonnegative, got {t}")
    _check_ball_length(len(x), force)
    result = set()
    for z, u in _descendants(x.symbols).items():
        if u <= t:
            result.update(_disjoint_ball(z, t - u))
    return sorted(QaryString(x.q, y) for y in result)


def effective_sphere(x: QaryString, r: int) -> List[QaryString]:
    """
    Find strings obtained by exactly `r` swaps of unequal symbols.

    Distinct sets of such swaps change distinct sets of positions, so
    each pattern gives its own string.

    :param x:
        string to be altered
    :param r:
        number of disjoint transpositions each of which swaps
        two unequal symbols
    :return:
        strings in lexicographic order
    """
    boundaries = [
        k for k in range(1, len(x)) if x.symbols[k - 1] != x.symbols[k]
    ]
    result = []
    for pattern in itertools.combinations(boundaries, r):
        if all(b >= a + 2 for a, b in zip(pattern, pattern[1:])):
            result.append(QaryString(x.q, swap_locations(x.symbols, pattern)))
    return sorted(result)


def distance(
        x: QaryString, y: QaryString, force: bool = False
) -> DistanceValue:
    """
    Compute the smallest total number of transpositions to meet.

    :param x:
        first string
    :param y:
        second string
    :param force:
        if it is `True`, length of strings is not checked against the limit
    :return:
        `d(x, y)` or `INFINITY` if `x` and `y` have no common descendant
    """
    _check_same_space(x, y)
    _check_ball_length(len(x), force)
    if sorted(x.symbols) != sorted(y.symbols):
        return INFINITY
    x_map = _descendants(x.symbols)
    y_map = _descendants(y.symbols)
    if len(y_map) < len(x_map):
        x_map, y_map = y_map, x_map
    costs = [t + y_map[z] for z, t in x_map.items() if z in y_map]
    return min(costs) if costs else INFINITY


def transposition_distance(
        x: QaryString, y: QaryString, force: bool = False
) -> DistanceValue:
    """
    Compute the minimum number of disjoint swaps turning `x` into `y`.

    :param x:
        first string
    :param y:
        second string
    :param force:
        if it is `True`, length of strings is not checked against the limit
    :return:
        number of transpositions or `INFINITY`
    """
    _check_same_space(x, y)
    _check_ball_length(len(x), force)
    return _descendants(x.symbols).get(y.symbols, INFINITY)


def distance_successive(x: QaryString, y: QaryString) -> DistanceValue:
    """
    Compute the minimum number of successive swaps turning `x` into `y`.

    :param x:
        first string
    :param y:
        second string
    :return:
        number of transpositions or `INFINITY`
    """
    _check_same_space(x, y)
    if sorted(x.symbols) != sorted(y.symbols):
        return INFINITY
    # Strings with the same symbols are at most n(n-1)/2 swaps apart.
    depths = _successive_ball(x.symbols, len(x) ** 2, y.symbols)
    return depths[y.symbols]


def min_distance(
        c: Code,
        which: Union[DistanceKind, str] = DistanceKind.D,
        force: bool = False
) -> DistanceValue:
    """
    Compute the minimum pairwise distance between distinct codewords.

    :param c:
        code
    :param which:
        distance function, either 'd' or 'successive'
    :param force:
        if it is `True`, length of codewords is not checked against the limit
    :return:
        minimum distance; `INFINITY` for a code with less than two codewords
    """
    which = DistanceKind(which)
    if len(c) < 2:
        logger.warning(
            f"Minimum distance of a code with {len(c)} codeword(s) "
            f"is set to infinity by convention."
        )
        return INFINITY
    result = INFINITY
    for x, y in itertools.combinations(c.codewords, 2):
        if which is DistanceKind.D:
            current = distance(x, y, force)
        else:
            current = distance_successive(x, y)
        result = min(result, current)
        if result == 1:
            break
    return result


def corrects_t(
        c: Code,
        t: int,
        model: Union[Model, str] = Model.DISJOINT,
        force: bool = False
) -> bool:
    """
    Check that radius-`t` balls around distinct codewords are disjoint.

    :param c:
        code
    :param t:
        number of transpositions
    :param model:
        channel model defining balls
    :param force:
        if it is `True`, length of codewords is not checked against the limit
    :return:
        `True` if the code corrects `t` transpositions, `False` else
    """
    model = Model(model)
    if model is Model.DISJOINT:
        _check_ball_length(c.n, force)
    find_ball = (
        _disjoint_ball if model is Model.DISJOINT else _successive_ball
    )
    owners = {}
    for index, x in enumerate(c.codewords):
        for z in find_ball(x.symbols, t):
            if owners.setdefault(z, index) != index:
                return False
    return True


def _composition_classes(
        q: int, n: int
) -> Dict[Tuple[int, ...], List[Tuple[int, ...]]]:
    # Transpositions preserve multiset of symbols, so finite distances
    # occur only within a class of strings with the same composition.
    classes = {}
    for x in utils.all_strings(q, n):
        classes.setdefault(tuple(sorted(x)), []).append(x)
    return classes


def max_finite_distance(q: int, n: int, force: bool = False) -> int:
    """
    Find the maximum finite distance between two strings of length `n`.

    :param q:
        alphabet size
    :param n:
        length of strings
    :param force:
        if it is `True`, size of the space is not checked against the limit
    :return:
        maximum over pairs with finite distance (`n - 1` is expected)
    """
    utils.check_instance_size(
        'space of pairs', q ** (2 * n), settings.get_max_space_size(), force
    )
    _check_ball_length(n, force)
    result = 0
    for members in _composition_classes(q, n).values():
        for x, y in itertools.combinations(members, 2):
            current = distance(QaryString(q, x), QaryString(q, y), force)
            if current is not INFINITY:
                result = max(result, current)
    return result


def _conflict_graph(q: int, n: int, t: int, model: Model) -> nx.Graph:
    # Strings conflict if their balls intersect; ball membership is
    # symmetric in both models, so members of the ball around `z` are
    # exactly the strings whose balls contain `z`.
    graph = nx.Graph()
    graph.add_nodes_from(utils.all_strings(q, n))
    for z in utils.all_strings(q, n):
        if model is Model.DISJOINT:
            members = _disjoint_ball(z, t)
        else:
            members = list(_successive_ball(z, t))
        graph.add_edges_from(itertools.combinations(members, 2))
    return graph


def optimal_code_search(
        q: int,
        n: int,
        t: int,
        model: Union[Model, str] = Model.DISJOINT,
        force: bool = False
) -> SearchResult:
    """
    Find maximum cardinality of a code correcting `t` transpositions.

    Maximum independent set of the conflict graph is found as
    maximum clique of the complement, component by component.

    :param q:
        alphabet size
    :param n:
        length of codewords
    :param t:
        number of transpositions
    :param model:
        channel model
    :param force:
        if it is `True`, size of the space is not checked against the limit
    :return:
        maximum cardinality and a code achieving it
    """
    model = Model(model)
    utils.check_instance_size(
        'conflict graph', q ** n, settings.get_max_search_space(), force
    )
    graph = _conflict_graph(q, n, t, model)
    logger.debug(
        f"Conflict graph for q={q}, n={n}, t={t} has "
        f"{graph.number_of_nodes()} vertices and {graph.number_of_edges()} "
        f"edges."
    )
    selected = []
    for component in nx.connected_components(graph):
        if len(component) == 1:
            selected.extend(component)
            continue
        complement = nx.complement(graph.subgraph(component))
        clique, _ = nx.max_weight_clique(complement, weight=None)
        selected.extend(clique)
    witness = Code.from_symbols(q, n, selected)
    return SearchResult(len(witness), witness)


def greedy_code(q: int, n: int, t: int, force: bool = False) -> Code:
    """
    Collect strings greedily so that pairwise distances exceed `2 * t`.

    Strings are scanned in lexicographic order and a string is kept if
    it is far enough from all previously kept strings.

    :param q:
        alphabet size
    :param n:
        length of codewords
    :param t:
        number of transpositions to be corrected
    :param force:
        if it is `True`, size of the space is not checked against the limit
    :return:
        code with minimum distance above `2 * t`
    """
    utils.check_instance_size(
        'space', q ** n, settings.get_max_space_size(), force
    )
    _check_ball_length(n, force)
    kept = []
    for members in _composition_classes(q, n).values():
        kept_in_class = []
        for x in members:
            candidate = QaryString(q, x)
            if all(distance(candidate, y, force) > 2 * t
                   for y in kept_in_class):
                kept_in_class.append(candidate)
        kept.extend(kept_in_class)
    return Code(q, n, tuple(kept))
