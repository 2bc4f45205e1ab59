"""Unit tests modules package"""
