"""Commands that evaluate, sample and validate a Saltbox-Roof distribution."""
import click
import sys
import logging

from ..config import VALIDATE_TOL
from ..errors import DomainViolation
from ..numverify import histogram
from ..roof import resolve
from ..truncation import quantile_comparison
from ..writer import csv_text, format_number
from .options import dist_options, load_params, write_or_echo, hist_path, \
    exit_with_input_error, INPUT_ERRORS, EXIT_FAILURE

_logger = logging.getLogger(__name__)


@click.command('eval')
@click.argument('op', type=click.Choice(('pdf', 'cdf', 'quantile')))
@click.argument('value', type=float)
@dist_options
def eval_dist(op, value, spec_file, a, b, c, shape):
    """Evaluate the pdf, cdf or quantile of a distribution and print the result.

    \b
    Args:
        op: The function to evaluate. Choose from pdf, cdf and quantile.
        value: The x at which the pdf or cdf is evaluated or the probability u
            of the quantile. Put "--" before a negative value.
    """
    try:
        dist = resolve(load_params(spec_file, a, b, c, shape))
        click.echo(format_number(getattr(dist, op)(value)))
    except INPUT_ERRORS as e:
        exit_with_input_error(e)
    except Exception as e:
        _logger.exception('Distribution evaluation failed.\n{}'.format(e))
        sys.exit(EXIT_FAILURE)
    else:
        sys.exit(0)


@click.command('sample')
@dist_options
@click.option('--n', 'n', help='Number of random values.', type=int,
              default=1000, show_default=True)
@click.option('--seed', help='Seed of the xoshiro256** generator. The same seed '
              'always gives the same values.', type=int, default=0, show_default=True)
@click.option('--bins', help='Optional number of equal-width bins over [a, b]. '
              'When given, the counts are written to a second CSV file next to '
              '--out with a "_hist" suffix.', type=int, default=None)
@click.option('--out', 'output_file', help='Optional CSV file for the values. By '
              'default they are printed to stdout.', default=None,
              type=click.Path(file_okay=True, dir_okay=False, resolve_path=True))
def sample(spec_file, a, b, c, shape, n, seed, bins, output_file):
    """Draw seeded random values from a distribution by inverse-transform sampling.

    The output is a CSV with a single column "x".
    """
    if bins is not None and output_file is None:
        raise click.UsageError('--bins requires --out.')
    try:
        dist = resolve(load_params(spec_file, a, b, c, shape))
        values = dist.sample(seed, n)
        write_or_echo(csv_text(['x'], [(x,) for x in values]), output_file)
        if bins is not None:
            counts = histogram(values, dist.a, dist.b, bins)
            write_or_echo(csv_text(['bin_lo', 'bin_hi', 'count'], counts),
                          hist_path(output_file))
    except INPUT_ERRORS as e:
        exit_with_input_error(e)
    except Exception as e:
        _logger.exception('Sampling failed.\n{}'.format(e))
        sys.exit(EXIT_FAILURE)
    else:
        sys.exit(0)


@click.command('validate')
@dist_options
@click.option('--n', 'n', help='Number of random probabilities to compare.',
              type=int, default=50, show_default=True)
@click.option('--seed', help='Seed of the generator drawing the probabilities.',
              type=int, default=0, show_default=True)
@click.option('--out', 'output_file', help='Optional CSV file for the compared '
              'quantiles with the columns u, explicit, oracle and abs_diff.',
              default=None, type=click.Path(
                  file_okay=True, dir_okay=False, resolve_path=True))
def validate(spec_file, a, b, c, shape, n, seed, output_file):
    """Compare the explicit quantile with the truncated-triangle quantile.

    The largest absolute difference is printed. The command exits with code 1
    when it is not below 1e-7.
    """
    try:
        if n < 1:
            raise DomainViolation(
                'Input --n must be at least 1. Got {}.'.format(n), 'n>=1')
        dist = resolve(load_params(spec_file, a, b, c, shape))
        rows = quantile_comparison(dist, n, seed)
        max_diff = max(row[3] for row in rows)
        if output_file is not None:
            write_or_echo(
                csv_text(['u', 'explicit', 'oracle', 'abs_diff'], rows), output_file)
        click.echo(format_number(max_diff))
    except INPUT_ERRORS as e:
        exit_with_input_error(e)
    except Exception as e:
        _logger.exception('Validation failed.\n{}'.format(e))
        sys.exit(EXIT_FAILURE)
    if not max_diff < VALIDATE_TOL:
        click.echo('Quantile difference {} is not below {}.'.format(
            format_number(max_diff), format_number(VALIDATE_TOL)), err=True)
        sys.exit(EXIT_FAILURE)
    sys.exit(0)
