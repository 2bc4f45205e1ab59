"""
Configuration package for the nfnmk application.

This package contains modules and settings related to application configuration.
"""
