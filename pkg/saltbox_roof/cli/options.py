"""Options and helpers shared by the saltbox-roof commands."""
import os
import sys

import click

from ..errors import SaltboxRoofError
from ..roof import RoofParams, read_spec_file
from ..writer import write_atomic

# exit code of domain, usage and input errors
EXIT_DOMAIN = 2
# exit code of validation breaches and unexpected failures
EXIT_FAILURE = 1

# errors that come from bad user input rather than from a failing computation
INPUT_ERRORS = (SaltboxRoofError, TypeError, AssertionError)


def dist_options(func):
    """Add the options that describe a Saltbox-Roof distribution to a command."""
    options = [
        click.option(
            '--spec-file', help='Optional JSON file with the keys a, b, c and shape '
            'of the distribution. Any of the options below override the values of '
            'the file.', default=None, type=click.Path(
                exists=True, file_okay=True, dir_okay=False, resolve_path=True)),
        click.option('--a', 'a', help='Lower limit of the support. (Default: 0).',
                     type=float, default=None),
        click.option('--b', 'b', help='Upper limit of the support. (Default: 1).',
                     type=float, default=None),
        click.option('--c', 'c', help='Mode of the distribution, between a and b.',
                     type=float, default=None),
        click.option('--shape', help='Shape factor between 0 (flat) and 1 '
                     '(triangular).', type=float, default=None)
    ]
    for option in reversed(options):
        func = option(func)
    return func


def load_params(spec_file=None, a=None, b=None, c=None, shape=None):
    """Get RoofParams from an optional specification file and option values.

    Option values that are not None override the file. The limits default to
    the unit interval when neither source gives them.
    """
    data = read_spec_file(spec_file) if spec_file is not None else {}
    flags = {'a': a, 'b': b, 'c': c, 'shape': shape}
    data.update({key: val for key, val in flags.items() if val is not None})
    data.setdefault('a', 0.0)
    data.setdefault('b', 1.0)
    return RoofParams.from_dict(data)


def write_or_echo(text, output_file=None):
    """Write text to a file atomically or print it when no file is given."""
    if output_file is None:
        click.echo(text, nl=False)
    else:
        write_atomic(output_file, text)


def hist_path(output_file):
    """Get the path of the histogram file that accompanies a sample file."""
    return '{}_hist.csv'.format(os.path.splitext(output_file)[0])


def exit_with_input_error(error):
    """Print a one-line diagnostic for an input error and exit with code 2."""
    message = ' '.join(str(error).split()) or type(error).__name__
    click.echo('Error: {}'.format(message), err=True)
    sys.exit(EXIT_DOMAIN)
