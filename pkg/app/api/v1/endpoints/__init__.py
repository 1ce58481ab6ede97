"""
APIエンドポイント

API v1のエンドポイント定義
"""

