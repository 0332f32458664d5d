"""saltbox-roof commands."""
import click

from .dist import eval_dist, sample, validate
from .domain import domain
from .spacing import space, curve


@click.group(help='Evaluate, sample and verify the Saltbox-Roof distribution.')
@click.version_option(package_name='saltbox-roof')
def main():
    pass


main.add_command(eval_dist)
main.add_command(sample)
main.add_command(space)
main.add_command(curve)
main.add_command(domain)
main.add_command(validate)
