"""
Witness construction tests: explicit colorings, ell-tile matrices and the witness dispatcher
"""
