"""
API v1

APIバージョン1のルーター
"""

