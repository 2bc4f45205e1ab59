"""Entry point for the CLI."""

from logging import getLogger

import click

from nfnmk.cli._utils import AliasedGroup, config_logging
from nfnmk.cli.compare import compare
from nfnmk.cli.config import config
from nfnmk.cli.dataset import gen_data
from nfnmk.cli.evaluate import evaluate, export
from nfnmk.cli.train import train
from nfnmk.config.settings import ConfigRepository

logger = getLogger(__name__)


@click.group(cls=AliasedGroup)
@click.version_option(package_name="nfnmk")
def cli() -> None:
    """NFN-MK neuro-fuzzy model: datasets, training, evaluation and comparison."""
    repo = ConfigRepository.create()

    # Configure logging
    config_logging(repo)


cli.add_command(gen_data)
cli.add_command(train)
cli.add_command(evaluate)
cli.add_command(compare)
cli.add_command(export)
cli.add_command(config)
