"""
Classification tests: closed-form polychromatic numbers and the Newman condition
"""
