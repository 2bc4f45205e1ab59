"""Unit tests for the bench module"""
