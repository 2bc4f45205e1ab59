"""Dependency injection configuration."""
