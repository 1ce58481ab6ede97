"""
Z_n core tests: residue sets, transform chains, normalization and pull-back
"""
