"""
Pydanticスキーマ定義

CLI出力・APIリクエスト/レスポンスのスキーマ定義
"""
