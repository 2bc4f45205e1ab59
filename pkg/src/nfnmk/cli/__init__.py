"""
CLI module for nfnmk.

This package provides the command-line interface for generating datasets, training,
evaluating and comparing models.
"""
