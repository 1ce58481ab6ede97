"""
APIルーター

FastAPIルーター定義
"""

