"""Command that reports the admissible domain of the Saltbox-Roof shape."""
import click
import sys
import logging

from ..roof import c_limit, domain_boundary
from ..writer import csv_text, format_number
from .options import write_or_echo, exit_with_input_error, INPUT_ERRORS, EXIT_FAILURE

_logger = logging.getLogger(__name__)


@click.command('domain')
@click.option('--rho', help='Shape factor for which the largest relative mode is '
              'printed.', type=float, default=None)
@click.option('--grid', help='Number of equally spaced shape factors from 0 to 1 '
              'at which the boundary of the domain is written.', type=int,
              default=None)
@click.option('--out', 'output_file', help='Optional CSV file for the --grid rows. '
              'By default they are printed to stdout.', default=None,
              type=click.Path(file_okay=True, dir_okay=False, resolve_path=True))
def domain(rho, grid, output_file):
    """Get the largest relative mode c_limit = 2 - 2 / (rho + 1) of shape factors.

    Use --rho for a single value or --grid for a CSV with the columns "rho_hat"
    and "c_limit".
    """
    if (rho is None) == (grid is None):
        raise click.UsageError('Use exactly one of --rho and --grid.')
    try:
        if rho is not None:
            click.echo(format_number(c_limit(rho)))
        else:
            rows = domain_boundary(grid)
            write_or_echo(csv_text(['rho_hat', 'c_limit'], rows), output_file)
    except INPUT_ERRORS as e:
        exit_with_input_error(e)
    except Exception as e:
        _logger.exception('Domain evaluation failed.\n{}'.format(e))
        sys.exit(EXIT_FAILURE)
    else:
        sys.exit(0)
