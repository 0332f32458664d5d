"""Commands that spread points over an interval with a Saltbox-Roof distribution."""
import click
import sys
import logging

from ..curve import CurveSpec, curve_rows
from ..roof import resolve
from ..spacing import spaced_points
from ..writer import csv_text
from .options import dist_options, load_params, write_or_echo, \
    exit_with_input_error, INPUT_ERRORS, EXIT_FAILURE

_logger = logging.getLogger(__name__)


@click.command('space')
@dist_options
@click.option('--n', 'n', help='Number of points including both ends of the '
              'interval.', type=int, default=30, show_default=True)
@click.option('--interval', help='Start and end of the interval to fill. By default '
              'the points stay on the support [a, b] of the distribution.',
              type=(float, float), default=None)
@click.option('--out', 'output_file', help='Optional CSV file for the points. By '
              'default they are printed to stdout.', default=None,
              type=click.Path(file_okay=True, dir_okay=False, resolve_path=True))
def space(spec_file, a, b, c, shape, n, interval, output_file):
    """Spread points over an interval, densest around the mode of a distribution.

    Equally spaced probabilities from 0 to 1 are passed through the quantile
    function and the results are rescaled to the interval. The output is a CSV
    with a single column "x".
    """
    try:
        dist = resolve(load_params(spec_file, a, b, c, shape))
        x_m, x_M = (dist.a, dist.b) if interval is None else interval
        points = spaced_points(dist, n, x_m, x_M)
        write_or_echo(csv_text(['x'], [(x,) for x in points]), output_file)
    except INPUT_ERRORS as e:
        exit_with_input_error(e)
    except Exception as e:
        _logger.exception('Point spacing failed.\n{}'.format(e))
        sys.exit(EXIT_FAILURE)
    else:
        sys.exit(0)


@click.command('curve')
@dist_options
@click.option('--n', 'n', help='Number of points on the curve.', type=int,
              default=20, show_default=True)
@click.option('--interval', help='Start and end of the curve along x.',
              type=(float, float), default=(-1.0, 0.2), show_default=True)
@click.option('--poly', help='Coefficients A0, A1 and A2 of the parabola '
              'y = A2 x^2 + A1 x + A0.', type=(float, float, float),
              default=(0.0, 0.0, 1.0), show_default=True)
@click.option('--out', 'output_file', help='Optional CSV file for the curve points. '
              'By default they are printed to stdout.', default=None,
              type=click.Path(file_okay=True, dir_okay=False, resolve_path=True))
def curve(spec_file, a, b, c, shape, n, interval, poly, output_file):
    """Sample a parabola with points spaced by the quantiles of a distribution.

    The support of the distribution is mapped onto the interval so that a mode
    placed under the vertex puts the most points where the curve bends the most.
    The output is a CSV with the columns "x", "y" and "curvature".
    """
    try:
        dist = resolve(load_params(spec_file, a, b, c, shape))
        spec = CurveSpec(poly[0], poly[1], poly[2], interval[0], interval[1])
        rows = curve_rows(spec, dist, n)
        write_or_echo(csv_text(['x', 'y', 'curvature'], rows), output_file)
    except INPUT_ERRORS as e:
        exit_with_input_error(e)
    except Exception as e:
        _logger.exception('Curve sampling failed.\n{}'.format(e))
        sys.exit(EXIT_FAILURE)
    else:
        sys.exit(0)
