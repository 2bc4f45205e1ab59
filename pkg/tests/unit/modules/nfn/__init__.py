"""Unit tests for the nfn module"""
