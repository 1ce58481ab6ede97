"""
API v1ルーター

APIバージョン1のすべてのエンドポイントを統合
"""
from fastapi import APIRouter

from app.api.v1.endpoints import polychromatic

api_router = APIRouter()

# 多色彩色APIを追加
api_router.include_router(polychromatic.router)
