"""
Tests package for Polychromatic Zn
"""
