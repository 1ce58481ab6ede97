"""
Command-line interface tests
"""
