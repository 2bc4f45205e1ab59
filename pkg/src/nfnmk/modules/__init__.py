"""
Modules package for the nfnmk application.

This package contains core modules that define the main functionality of the application.
"""
