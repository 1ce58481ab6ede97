"""
証拠彩色構成モジュール

閉じた式で求めた多色数 p_n(S) をちょうど p 色で実現する彩色を明示的に構成する。
3元集合は正規形上で構成し、変換チェーンを逆にたどって元の法に引き戻す
"""
from math import gcd
from typing import Optional

import numpy as np

from app.constants.error_codes import ErrorCode
from app.exceptions import InvalidInputError, VerificationDefectError
from app.models.coloring import Coloring, EllMatrix
from app.models.residue import CanonicalKind, ResidueSet
from app.services.classify import poly_number
from app.services.oracle import verify
from app.services.zn_core import normalize, pull_back_coloring, pull_back_through_chain, reduce_gcd
from app.utils.logger import get_logger

logger = get_logger(__name__)

# 2色の表示上の対応（0↔R, 1↔B）
R, B = 0, 1

# witness_with_branch が返す分岐名
BRANCHES = (
    "constant",
    "rby",
    "alternating",
    "alternating_size2",
    "odd_even_b",
    "color_013",
    "color_01b",
    "block",
)

# color_01b が r = n mod (b−2) に応じて使う彩色の種別
COLOR_01B_REGIMES = ("chi0", "chi1", "chi2", "chi3", "chi4")


def _require(condition: bool, detail: str) -> None:
    if not condition:
        raise InvalidInputError(detail)


def _ensure_polychromatic(n: int, residue_set: ResidueSet, coloring: Coloring, label: str) -> Coloring:
    """
    構成した彩色を検証し、違反があれば VerificationDefectError を送出する
    """
    violations = verify(n, residue_set, coloring)
    if violations:
        first = violations[0]
        logger.error(
            f"構成の自己検証に失敗: {label}, n={n}, S={residue_set.to_text()}, "
            f"shift={first.shift}, missing={first.missing_colors}"
        )
        raise VerificationDefectError(
            f"{label}: n={n}, S={residue_set.to_text()} で {len(violations)} 個の平行移動が違反"
        )
    return coloring


def color_rby(n: int) -> Coloring:
    """
    3色彩色 x ↦ x mod 3（RBYRBY…）

    Raises:
        InvalidInputError: 3 ∤ n の場合
    """
    _require(n % 3 == 0, f"color_rby は 3 | n が必要です: n={n}")
    return Coloring(modulus=n, num_colors=3, colors=tuple(x % 3 for x in range(n)))


def color_alternating(n: int) -> Coloring:
    """
    交互彩色 x ↦ x mod 2（RBRB…）

    Raises:
        InvalidInputError: n が奇数の場合
    """
    _require(n % 2 == 0 and n >= 2, f"color_alternating は偶数の n が必要です: n={n}")
    return Coloring(modulus=n, num_colors=2, colors=tuple(x % 2 for x in range(n)))


def color_two_odd_even_b(n: int) -> Coloring:
    """
    n 奇数、S = {0, 1, b}（b 偶数）向けの彩色 RRBRBRB…

    0 と奇数を R、2 以上の偶数を B とする。x, x+1 が同色になるのは x = 0 だけで、
    そのとき x + b は 2 以上の偶数で B になる

    Raises:
        InvalidInputError: n が偶数、または n < 3 の場合
    """
    _require(n % 2 == 1 and n >= 3, f"color_two_odd_even_b は 3 以上の奇数の n が必要です: n={n}")
    return Coloring(
        modulus=n,
        num_colors=2,
        colors=tuple(R if x == 0 or x % 2 == 1 else B for x in range(n)),
    )


def blocks_013(n: int) -> list[int]:
    """
    n を偶数個の 2 と 3 の和に分解する（2 を先に並べる）

    - n ≡ 1 (mod 4): (n−3)/2 個の 2 と 3 が1個
    - n ≡ 3 (mod 4), n ≥ 11: (n−9)/2 個の 2 と 3 が3個

    Raises:
        InvalidInputError: n が偶数、n < 5、または n = 7 の場合
    """
    _require(n % 2 == 1 and n >= 5 and n != 7, f"blocks_013 は 5 以上の奇数で 7 以外の n が必要です: n={n}")
    if n % 4 == 1:
        return [2] * ((n - 3) // 2) + [3]
    return [2] * ((n - 9) // 2) + [3, 3, 3]


def color_013(n: int) -> Coloring:
    """
    S = {0, 1, 3} 向けの彩色

    blocks_013 の各ブロックを R, B 交互に塗る。長さ 2, 3 のブロックが交互の色なので
    {x, x+1, x+3} は必ず両方の色を含む

    Raises:
        InvalidInputError: n が偶数、n < 5、または n = 7 の場合
    """
    colors: list[int] = []
    for index, length in enumerate(blocks_013(n)):
        colors.extend([index % 2] * length)
    return Coloring(modulus=n, num_colors=2, colors=tuple(colors))


def _chi0(x: int, period: int) -> int:
    y = x % period
    return R if y == 0 or y % 2 == 1 else B


def _chi_small_remainder(n: int, b: int, r: int) -> list[int]:
    """剰余 r = 1, 2, 3 の彩色"""
    period = b - 2
    colors = []
    for x in range(n):
        if r == 1:
            if x <= n - b:
                c = _chi0(x, period)
            elif x < n - 1:
                c = R if x % 2 == 0 else B
            else:
                c = B
        elif r == 2:
            if x <= n - b - 1:
                c = _chi0(x, period)
            elif x == n - b:
                c = R
            elif x == n - b + 1:
                c = B
            else:
                c = R if x % 2 == 1 else B
        else:
            if x <= n - b - 2:
                c = _chi0(x, period)
            elif x == n - b - 1:
                c = R
            elif x < n - 1:
                c = R if x % 2 == 0 else B
            else:
                c = B
        colors.append(c)
    return colors


def _chi_large_remainder_base(n: int, b: int, r: int) -> list[int]:
    """
    剰余 r ≥ 4 の彩色の骨格

    x ≤ n−b−r+4 は周期彩色、n−r+2 と n−1 は B、[n−b+2, n−2] は n−r+2 を起点に交互、
    [n−b−r+5, n−b+1] は左端から交互に塗る
    """
    period = b - 2
    colors = [_chi0(x, period) for x in range(n)]
    left_anchor = n - b - r + 4
    pinned = n - r + 2
    for x in range(n - b + 2, n - 1):
        colors[x] = B if (x - pinned) % 2 == 0 else R
    colors[n - 1] = B
    for x in range(left_anchor + 1, n - b + 2):
        colors[x] = 1 - colors[x - 1]
    return colors


def color_01b_regime(n: int, b: int) -> str:
    """color_01b が使う彩色の種別（r = n mod (b−2) に応じて chi0〜chi4）"""
    return f"chi{min(n % (b - 2), 4)}"


def color_01b(n: int, b: int) -> Coloring:
    """
    S = {0, 1, b}（n 奇数 ≥ 9、b 奇数、5 ≤ b ≤ ⌈n/2⌉）向けの2彩色

    n = m(b−2) + r（0 ≤ r < b−2）と書き、r = 0 なら周期 b−2 の彩色
    （y = x mod (b−2) が 0 または奇数なら R）、r = 1, 2, 3 は末尾を個別に調整した彩色、
    r ≥ 4 は骨格を作ったうえで n−b と n−b+1 の色を候補順に試す

    Args:
        n: 法
        b: S の第3元

    Returns:
        Coloring: 検証済みの2彩色

    Raises:
        InvalidInputError: 前提条件を満たさない場合
        VerificationDefectError: 構成した彩色が検証に失敗した場合
    """
    _require(n >= 9 and n % 2 == 1, f"color_01b は 9 以上の奇数の n が必要です: n={n}")
    _require(b % 2 == 1 and 5 <= b <= (n + 1) // 2, f"color_01b は 5 ≤ b ≤ ⌈n/2⌉ の奇数 b が必要です: n={n}, b={b}")

    residue_set = ResidueSet(modulus=n, elements=(0, 1, b))
    period = b - 2
    r = n % period
    regime = color_01b_regime(n, b)

    if r == 0:
        colors = [_chi0(x, period) for x in range(n)]
        return _ensure_polychromatic(n, residue_set, Coloring(modulus=n, num_colors=2, colors=tuple(colors)), regime)
    if r <= 3:
        colors = _chi_small_remainder(n, b, r)
        return _ensure_polychromatic(
            n, residue_set, Coloring(modulus=n, num_colors=2, colors=tuple(colors)), regime
        )

    base = _chi_large_remainder_base(n, b, r)
    first, last = n - b, n - b + 1
    for last_color in (B, R):
        for first_color in (base[first], 1 - base[first]):
            colors = list(base)
            colors[first] = first_color
            colors[last] = last_color
            candidate = Coloring(modulus=n, num_colors=2, colors=tuple(colors))
            if not verify(n, residue_set, candidate):
                return candidate
    logger.error(f"{regime} の候補がすべて違反: n={n}, b={b}, r={r}")
    raise VerificationDefectError(f"{regime}: n={n}, b={b} で候補彩色がすべて違反")


def ell_tile_coloring(s: int, t: int) -> EllMatrix:
    """
    s×t 行列の ell-tile 2彩色

    - s 偶数: 行ごとの縞（i mod 2）
    - t 偶数: 列ごとの縞（j mod 2）
    - 両方奇数: i ≡ j (mod 2) なら R の市松模様で、(0, t−1) と (s−1, 0) を B にする

    Raises:
        InvalidInputError: s < 2 または t < 2 の場合
    """
    _require(s >= 2 and t >= 2, f"ell_tile_coloring は s, t ≥ 2 が必要です: s={s}, t={t}")
    i, j = np.indices((s, t))
    if s % 2 == 0:
        entries = i % 2
    elif t % 2 == 0:
        entries = j % 2
    else:
        entries = (i + j) % 2
        entries[0, t - 1] = B
        entries[s - 1, 0] = B
    return EllMatrix.from_array(entries)


def _check_block_preconditions(n: int, a: int, b: int) -> tuple[int, int]:
    _require(n % 2 == 1, f"block_coloring は奇数の n が必要です: n={n}")
    _require(gcd(gcd(a, b), n) == 1, f"gcd({a}, {b}, {n}) ≠ 1 です")
    s, t = gcd(a, n), gcd(b, n)
    _require(s > 1 and t > 1, f"gcd(a,n), gcd(b,n) はともに 1 より大きい必要があります: s={s}, t={t}")
    return s, t


def block_matrix(n: int, a: int, b: int, rows: Optional[int] = None) -> np.ndarray:
    """
    行列 M（m_ij = a·i + b·j mod n、j = 0..n/t−1、t = gcd(b, n)）の先頭 rows 行

    Args:
        n: 法
        a: 行方向の増分
        b: 列方向の増分
        rows: 行数（省略時は t）

    Returns:
        np.ndarray: rows × n/t の整数行列
    """
    t = gcd(b, n)
    i, j = np.indices((rows if rows is not None else t, n // t))
    return (a * i + b * j) % n


def block_row_shift(n: int, a: int, b: int) -> int:
    """
    行列 M を s×t ブロックに分けたとき、ブロック行が1つ下がるごとの列ブロックのずれ

    p = a/s、q = (b/t)⁻¹ mod n/t として pq mod n/(st)

    Raises:
        InvalidInputError: block_coloring の前提条件を満たさない場合
    """
    s, t = _check_block_preconditions(n, a, b)
    q = pow(b // t, -1, n // t)
    return (a // s) * q % (n // (s * t))


def block_coloring(n: int, a: int, b: int) -> Coloring:
    """
    S = {0, a, b}（n 奇数、s = gcd(a,n) > 1、t = gcd(b,n) > 1、gcd(a,b,n) = 1）向けの2彩色

    行列 M の先頭 t 行は Z_n の各元をちょうど1回ずつ含む。m_ij に t×s の ell-tile 彩色の
    (i mod t, j mod s) 成分の色を割り当てると、平行移動 {m_ij, m_i,j+1, m_i+1,j} は ell-tile になる

    Raises:
        InvalidInputError: 前提条件を満たさない場合
        VerificationDefectError: M の先頭 t 行が単射でない、または検証に失敗した場合
    """
    s, t = _check_block_preconditions(n, a, b)
    matrix = block_matrix(n, a, b)
    if np.unique(matrix).size != n:
        raise VerificationDefectError(f"block_matrix({n}, {a}, {b}) の先頭 {t} 行が Z_n を一意に覆いません")

    tile_matrix = ell_tile_coloring(t, s)
    if not tile_matrix.is_ell_tile_coloring:
        raise VerificationDefectError(f"ell_tile_coloring({t}, {s}) に単色の ell-tile があります")
    tile = tile_matrix.as_array()
    _, j = np.indices(matrix.shape)
    colors = np.empty(n, dtype=np.int64)
    colors[matrix] = tile[np.arange(t)[:, None], j % s]

    coloring = Coloring(modulus=n, num_colors=2, colors=tuple(int(c) for c in colors))
    return _ensure_polychromatic(n, ResidueSet.of(n, (0, a, b)), coloring, "block")


def _alternate_cycles(n: int, b: int) -> Coloring:
    """x ↦ x + b の各巡回を交互に塗る（巡回の長さは偶数）"""
    colors = [-1] * n
    for start in range(n):
        if colors[start] >= 0:
            continue
        x, c = start, R
        while colors[x] < 0:
            colors[x] = c
            x, c = (x + b) % n, 1 - c
    return Coloring(modulus=n, num_colors=2, colors=tuple(colors))


def _witness_size3_two(residue_set: ResidueSet) -> tuple[Coloring, str]:
    form = normalize(residue_set)
    n_reduced = form.reduced_modulus
    _, a, b = form.reduced_set.elements

    if n_reduced % 2 == 0:
        coloring, branch = color_alternating(n_reduced), "alternating"
    elif form.kind == CanonicalKind.CASE_I:
        if b % 2 == 0:
            coloring, branch = color_two_odd_even_b(n_reduced), "odd_even_b"
        elif b == 3:
            coloring, branch = color_013(n_reduced), "color_013"
        else:
            coloring, branch = color_01b(n_reduced, b), "color_01b"
    else:
        coloring, branch = block_coloring(n_reduced, a, b), "block"

    logger.debug(
        f"正規形: {form.kind.value}, n'={n_reduced}, S'={form.reduced_set.to_text()}, "
        f"chain={form.chain.summary()}, branch={branch}"
    )
    return pull_back_coloring(form, coloring), branch


def witness_with_branch(n: int, residue_set: ResidueSet) -> tuple[Coloring, str]:
    """
    多色数 p_n(S) をちょうど p 色で実現する彩色と、使った構成の分岐名を返す

    Args:
        n: 法
        residue_set: 2元または3元集合

    Returns:
        tuple[Coloring, str]: 検証済みの彩色と分岐名（BRANCHES のいずれか）

    Raises:
        InvalidInputError: 要素数が 2, 3 以外の場合、または法が一致しない場合
        VerificationDefectError: 構成した彩色が検証に失敗した場合
    """
    classification = poly_number(n, residue_set)
    p = classification.p

    if p == 1:
        coloring, branch = Coloring.constant(n), "constant"
    elif p == 3:
        chain, reduced = reduce_gcd(residue_set)
        coloring, branch = pull_back_through_chain(chain, color_rby(reduced.modulus)), "rby"
    elif len(residue_set) == 2:
        step = (residue_set.elements[1] - residue_set.elements[0]) % n
        coloring, branch = _alternate_cycles(n, step), "alternating_size2"
    else:
        coloring, branch = _witness_size3_two(residue_set)

    if coloring.num_colors != p or coloring.used_colors != p:
        raise VerificationDefectError(f"{branch}: 色数 {coloring.used_colors} が p={p} と一致しません")
    return _ensure_polychromatic(n, residue_set, coloring, branch), branch


def witness(n: int, residue_set: ResidueSet) -> Coloring:
    """
    多色数 p_n(S) をちょうど p 色で実現する検証済みの彩色

    Raises:
        InvalidInputError: 要素数が 2, 3 以外の場合、または法が一致しない場合
        VerificationDefectError: 構成した彩色が検証に失敗した場合
    """
    coloring, _ = witness_with_branch(n, residue_set)
    return coloring


def complements_from_coloring(n: int, residue_set: ResidueSet, coloring: Coloring) -> list[ResidueSet]:
    """
    |S| 色の多色的彩色の各色クラス C から補集合 −C を作る

    各平行移動は各色クラスの元をちょうど1つ含むので S ⊕ (−C) = Z_n

    Raises:
        InvalidInputError: 彩色が |S| 色の多色的彩色でない場合
    """
    if coloring.num_colors != len(residue_set) or verify(n, residue_set, coloring):
        raise InvalidInputError(
            f"|S|={len(residue_set)} 色の多色的彩色が必要です",
            error_code=ErrorCode.INVALID_COLORING,
        )
    return [ResidueSet.of(n, (-x for x in members)) for members in coloring.color_classes()]
