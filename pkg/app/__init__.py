"""
Polychromatic Zn

巡回群 Z_n における S-多色彩色の多色数の分類・証拠彩色の構成・全探索による検証
"""

__version__ = "0.1.0"
