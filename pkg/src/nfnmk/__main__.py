"""CLI entry point for the nfnmk package."""

from nfnmk.cli.cli import cli

cli()
