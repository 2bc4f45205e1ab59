"""Unit tests for the mlp module"""
