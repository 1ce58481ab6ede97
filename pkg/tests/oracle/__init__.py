"""
Brute-force oracle tests: verification, polychromatic search, tiling and blocking sets
"""
