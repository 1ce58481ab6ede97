"""
HTTP API tests
"""
