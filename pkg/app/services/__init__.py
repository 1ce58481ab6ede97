"""
計算処理層

Z_n 基盤、多色数の分類、証拠彩色の構成、全探索オラクルと、それらをまとめるサービス
"""
