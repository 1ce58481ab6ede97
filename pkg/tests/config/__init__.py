"""
Configuration tests
"""
