"""
This module provides command-line interface.

Every subcommand validates its options before any computation and
writes results to standard output (or to a file where it is allowed),
so identical invocations produce identical output. Exit status is 0
on success, 1 if input can not be corrected or a checked property
fails, and 2 if options are invalid.

Author: Nikolay Lysenko
"""


import contextlib
import io
import logging
from typing import (
    Any, Callable, Dict, Generator, List, NamedTuple, Optional
)

import click

from swapcodes import asymptotics, utils, verification
from swapcodes.metric import (
    Code,
    ball_disjoint,
    ball_successive,
    distance,
    distance_successive,
    metric_ball,
    optimal_code_search,
    transposition_distance,
)
from swapcodes.qstring import (
    Model, QaryString, TranspositionPattern, apply_pattern, random_pattern
)
from swapcodes.single_codes import (
    BinaryParams,
    SyndromeParams,
    decode_binary,
    decode_q,
    enumerate_code_binary,
    enumerate_code_q,
    is_codeword_binary,
    is_codeword_q,
)
from swapcodes.user_input_processing import (
    parse_grid, parse_parameters, parse_symbols
)
from swapcodes.zero_error import (
    AlphabetPartition, ZeroErrorCodebook, decode_zero_error
)


logger = logging.getLogger(__name__)


class Construction(NamedTuple):
    """Membership test, decoder, and enumerator of a code."""

    q: int
    n: int
    contains: Callable[[QaryString], bool]
    decode: Callable[[QaryString], QaryString]
    enumerate: Callable[[bool], Code]


def build_construction(
        name: str,
        q: int,
        n: int,
        p: Optional[int] = None,
        s1: int = 0,
        s2: int = 0,
        s: int = 0,
        partition: Optional[str] = None
) -> Construction:
    """
    Create code of a given kind from its parameters.

    :param name:
        'syndrome', 'binary', or 'zero_error'
    :param q:
        alphabet size
    :param n:
        length of codewords
    :param p:
        modulus of the syndrome code
    :param s1:
        first residue of the syndrome code
    :param s2:
        second residue of the syndrome code
    :param s:
        residue of the binary code
    :param partition:
        partition of alphabet for the zero-error code, e.g., '0,1|2,3'
    :return:
        construction
    """
    if name == 'syndrome':
        params = SyndromeParams(q, n, s1, s2, p)
        return Construction(
            q, n,
            lambda x: is_codeword_q(x, params),
            lambda y: decode_q(y, params),
            lambda force: enumerate_code_q(params, force)
        )
    if name == 'binary':
        if q != 2:
            raise ValueError(f"Binary code requires q=2, got q={q}")
        binary_params = BinaryParams(n, s)
        return Construction(
            q, n,
            lambda x: is_codeword_binary(x, binary_params),
            lambda y: decode_binary(y, binary_params),
            lambda force: enumerate_code_binary(binary_params)
        )
    if name == 'zero_error':
        parsed = AlphabetPartition.from_text(partition) if partition else None
        codebook = ZeroErrorCodebook.create(q, n, parsed)
        return Construction(
            q, n,
            codebook.contains,
            lambda y: decode_zero_error(y, codebook),
            codebook.codewords
        )
    raise ValueError(f"Unknown construction: {name}")


@contextlib.contextmanager
def _handle_errors() -> Generator[None, None, None]:
    # Map library errors to exit statuses.
    try:
        yield
    except utils.UncorrectableInputError as e:
        raise click.ClickException(str(e))
    except ValueError as e:
        raise click.UsageError(str(e))


def _emit(lines: List[str], output: Optional[str] = None) -> None:
    # Write lines to a file or to standard output.
    text = ''.join(f'{line}\n' for line in lines)
    if output is None:
        click.echo(text, nl=False)
        return
    with open(output, 'w') as destination_file:
        destination_file.write(text)


PARAMETER_NAMES = {
    'syndrome': ['q', 'n', 'p', 's1', 's2'],
    'binary': ['n', 's'],
    'zero_error': ['q', 'n'],
}


def _construction_options(function: Callable) -> Callable:
    # Options shared by `check` and `decode`.
    options = [
        click.option(
            '--construction', required=True,
            type=click.Choice(['syndrome', 'binary', 'zero_error']),
            help='kind of code'
        ),
        click.option(
            '--params', default=None,
            help="values like '2,5,5,1,3' for q,n,p,s1,s2 (syndrome), "
                 "n,s (binary), or q,n (zero_error)"
        ),
        click.option('--q', type=int, default=None, help='alphabet size'),
        click.option('--n', type=int, default=None, help='length'),
        click.option('--p', type=int, default=None, help='modulus'),
        click.option('--s1', type=int, default=0, help='first residue'),
        click.option('--s2', type=int, default=0, help='second residue'),
        click.option('--s', type=int, default=0, help='binary residue'),
        click.option(
            '--partition', default=None, help="alphabet split like '0,1|2,3'"
        ),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def _construction_from_options(options: Dict[str, Any]) -> Construction:
    # Merge `--params` into separate options and build the code.
    name = options.pop('construction')
    params = options.pop('params')
    if params is not None:
        options.update(parse_parameters(params, PARAMETER_NAMES[name]))
    if name == 'binary' and options['q'] is None:
        options['q'] = 2
    missing = [key for key in ['q', 'n'] if options[key] is None]
    if missing:
        raise ValueError(f"Missing --{missing[0]} (or pass it in --params)")
    return build_construction(name, **options)


@click.group()
@click.option('--verbose', is_flag=True, help='show debug messages')
def cli(verbose: bool) -> None:
    """Study codes correcting adjacent transpositions."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(asctime)s %(name)s %(levelname)s: %(message)s'
    )


@cli.command()
@_construction_options
@click.option('--x', 'text', default=None, help="string like '0,1,1,0'")
@click.option('--list', 'list_all', is_flag=True, help='list all codewords')
@click.option('--force', is_flag=True, help='disable size limits')
def check(
        text: Optional[str], list_all: bool, force: bool, **options: Any
) -> None:
    """Check membership of a string or list the whole code."""
    with _handle_errors():
        code = _construction_from_options(options)
        if list_all:
            _emit([str(x) for x in code.enumerate(force)])
            return
        if text is None:
            raise ValueError("Either --x or --list must be passed")
        x = QaryString.from_text(text, code.q)
        _emit(['true' if code.contains(x) else 'false'])


@cli.command()
@_construction_options
@click.option('--y', 'text', required=True, help="string like '1,0,1,0'")
def decode(text: str, **options: Any) -> None:
    """Recover codeword from a received string."""
    with _handle_errors():
        code = _construction_from_options(options)
        y = QaryString.from_text(text, code.q)
        x = code.decode(y)
    _emit([str(x)])


@cli.command()
@click.option('--q', type=int, required=True, help='alphabet size')
@click.option('--x', 'text', required=True, help='transmitted string')
@click.option('--t', type=int, default=None, help='number of swaps')
@click.option(
    '--model', type=click.Choice([model.value for model in Model]),
    default=Model.DISJOINT.value, help='channel model'
)
@click.option('--seed', type=int, default=0, help='seed of random patterns')
@click.option('--pattern', default=None, help="locations like '1,4,9'")
def channel(
        q: int, text: str, t: Optional[int], model: str, seed: int,
        pattern: Optional[str]
) -> None:
    """Pass a string through the channel."""
    with _handle_errors():
        x = QaryString.from_text(text, q)
        if pattern is not None:
            applied = TranspositionPattern(parse_symbols(pattern), model)
        elif t is not None:
            applied = random_pattern(len(x), t, model, seed)
        else:
            raise ValueError("Either --t or --pattern must be passed")
        y = apply_pattern(x, applied)
    _emit([str(y), f'pattern: {applied}'])


@cli.command()
@click.option('--q', type=int, required=True, help='alphabet size')
@click.option('--x', 'text', required=True, help='center of the ball')
@click.option('--t', type=int, required=True, help='radius')
@click.option(
    '--model', type=click.Choice(['disjoint', 'successive', 'metric']),
    default='disjoint', help='kind of ball'
)
@click.option('--force', is_flag=True, help='disable size limits')
def ball(q: int, text: str, t: int, model: str, force: bool) -> None:
    """List a ball in lexicographic order."""
    with _handle_errors():
        x = QaryString.from_text(text, q)
        if model == 'disjoint':
            members = ball_disjoint(x, t, force)
        elif model == 'successive':
            members = ball_successive(x, t)
        else:
            members = metric_ball(x, t, force)
    _emit([str(member) for member in members])


@cli.command(name='distance')
@click.option('--q', type=int, required=True, help='alphabet size')
@click.option('--x', 'first', required=True, help='first string')
@click.option('--y', 'second', required=True, help='second string')
@click.option(
    '--which', type=click.Choice(['d', 'successive', 'transposition']),
    default='d', help='distance function'
)
@click.option('--force', is_flag=True, help='disable size limits')
def distance_command(
        q: int, first: str, second: str, which: str, force: bool
) -> None:
    """Compute distance between two strings."""
    with _handle_errors():
        x = QaryString.from_text(first, q)
        y = QaryString.from_text(second, q)
        if which == 'd':
            value = distance(x, y, force)
        elif which == 'successive':
            value = distance_successive(x, y)
        else:
            value = transposition_distance(x, y, force)
    _emit([str(value)])


@cli.command()
@click.option('--q', type=int, required=True, help='alphabet size')
@click.option('--n', type=int, required=True, help='length')
@click.option('--t', type=int, default=1, help='number of swaps')
@click.option(
    '--model', type=click.Choice([model.value for model in Model]),
    default=Model.DISJOINT.value, help='channel model'
)
@click.option('--force', is_flag=True, help='disable size limits')
def search(q: int, n: int, t: int, model: str, force: bool) -> None:
    """Find the largest code correcting `t` transpositions."""
    with _handle_errors():
        result = optimal_code_search(q, n, t, model, force)
    _emit([f'size: {result.size}'] + [str(x) for x in result.witness])


EXPONENTS = {
    'alpha': (asymptotics.alpha, 'rho'),
    'beta': (asymptotics.beta, 'rho'),
    'beta_bar': (asymptotics.beta_bar_upper, 'rho'),
    'gv': (asymptotics.gv_rate, 'delta'),
}


def _format_value(value: float) -> str:
    # Numbers are printed with fixed precision.
    return f'{value:.9f}'


def _cardinality_lines(q: int, n: Optional[int], t: int) -> List[str]:
    # Envelopes of optimal codes at a given length.
    if n is None:
        raise ValueError("Option --n is required for cardinality bounds")
    if t == 1:
        envelopes = asymptotics.cardinality_bounds_t1(q, n)
    else:
        envelopes = asymptotics.cardinality_bounds_t(q, n, t)
    return [
        'lower,upper',
        f'{envelopes.lower:.9e},{envelopes.upper:.9e}'
    ]


def _curve_lines(
        q: int, what: str, grid: Optional[List[float]]
) -> List[str]:
    # Exponent or rate curve as CSV.
    if grid is None:
        raise ValueError("Either --grid or --point must be passed")
    stream = io.StringIO()
    if what == 'combined':
        points = asymptotics.rate_curve(q, grid)
        asymptotics.write_rate_curve(points, stream)
    else:
        function, argument = EXPONENTS[what]
        points = asymptotics.exponent_curve(function, q, grid)
        asymptotics.write_exponent_curve(points, stream, argument)
    return stream.getvalue().splitlines()


def _bounds_lines(
        q: int, what: str, grid: Optional[List[float]], n: Optional[int],
        t: int
) -> List[str]:
    # Compute rows of `bounds` output.
    if what == 'cardinality':
        return _cardinality_lines(q, n, t)
    if what == 'crossover':
        delta0 = asymptotics.crossover_delta0(q)
        return ['none' if delta0 is None else _format_value(delta0)]
    return _curve_lines(q, what, grid)


@cli.command()
@click.option('--q', type=int, required=True, help='alphabet size')
@click.option(
    '--what',
    type=click.Choice(
        list(EXPONENTS) + ['combined', 'cardinality', 'crossover']
    ),
    required=True, help='quantity to evaluate'
)
@click.option('--grid', 'grid_text', default=None, help="like '0:1:0.001'")
@click.option('--point', type=float, default=None, help='single argument')
@click.option('--n', type=int, default=None, help='length')
@click.option('--t', type=int, default=1, help='number of swaps')
@click.option('--output', default=None, help='path to CSV file')
def bounds(
        q: int, what: str, grid_text: Optional[str], point: Optional[float],
        n: Optional[int], t: int, output: Optional[str]
) -> None:
    """Evaluate growth exponents, rate curves, or size envelopes."""
    with _handle_errors():
        if q < 2:
            raise ValueError(f"Alphabet size must be at least 2, got {q}")
        if grid_text is not None and point is not None:
            raise ValueError("Options --grid and --point are exclusive")
        grid = parse_grid(grid_text) if grid_text is not None else None
        if point is not None and what in EXPONENTS:
            function, _ = EXPONENTS[what]
            lines = [_format_value(function(q, point))]
        else:
            lines = _bounds_lines(
                q, what, [point] if point is not None else grid, n, t
            )
    _emit(lines, output)


@cli.command()
@click.option(
    '--suite', type=click.Choice(list(verification.SUITES)), required=True,
    help='family of properties'
)
@click.option('--q', type=int, default=2, help='alphabet size')
@click.option('--max-n', type=int, default=6, help='maximum length')
@click.option('--force', is_flag=True, help='disable size limits')
@click.option('--output', default=None, help='path to CSV file')
@click.pass_context
def verify(
        ctx: click.Context, suite: str, q: int, max_n: int, force: bool,
        output: Optional[str]
) -> None:
    """Check properties exhaustively and report verdicts."""
    with _handle_errors():
        results = verification.run_suite(suite, q, max_n, force)
    stream = io.StringIO()
    verification.write_report(results, stream)
    _emit(stream.getvalue().splitlines(), output)
    if not verification.all_passed(results):
        ctx.exit(1)
