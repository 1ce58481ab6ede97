"""
全探索オラクルモジュール

閉じた式とは独立に、定義どおりの全探索で多色数・タイリング・ブロッキング集合を求める。
探索の上限は設定（oracle_max_*）で与え、超過時は SearchBoundExceededError を送出する
"""
from itertools import combinations
from typing import Optional

import numpy as np

from app.config import settings
from app.constants.error_codes import ErrorCode
from app.exceptions import InvalidInputError, SearchBoundExceededError
from app.models.certificate import TileCertificate, Violation
from app.models.coloring import Coloring
from app.models.residue import ResidueSet
from app.services.zn_core import pull_back_through_chain, reduce_gcd
from app.utils.logger import get_logger

logger = get_logger(__name__)


def _translate_indices(n: int, residue_set: ResidueSet) -> np.ndarray:
    """行 a が a + S の元（n×|S|）"""
    return (np.arange(n)[:, None] + np.asarray(residue_set.elements)[None, :]) % n


def _check_same_modulus(n: int, *sets: ResidueSet) -> None:
    for residue_set in sets:
        if residue_set.modulus != n:
            raise InvalidInputError(
                f"集合の法 {residue_set.modulus} が n={n} と一致しません",
                error_code=ErrorCode.INVALID_RESIDUE_SET,
            )


def _check_bound(n: int, bound: int, name: str) -> None:
    if n > bound:
        raise SearchBoundExceededError(f"{name}: n={n} は上限 {bound} を超えています")


def verify(n: int, residue_set: ResidueSet, coloring: Coloring) -> list[Violation]:
    """
    すべての平行移動 a + S が k 色すべてを含むか検証する

    Args:
        n: 法
        residue_set: 集合 S
        coloring: 長さ n の k-彩色

    Returns:
        list[Violation]: 違反の一覧（空なら多色的）

    Raises:
        InvalidInputError: 彩色の長さ、または集合の法が n と一致しない場合
    """
    _check_same_modulus(n, residue_set)
    if coloring.modulus != n:
        raise InvalidInputError(
            f"彩色の長さ {coloring.modulus} が n={n} と一致しません",
            error_code=ErrorCode.INVALID_COLORING,
        )

    k = coloring.num_colors
    seen = coloring.as_array()[_translate_indices(n, residue_set)]
    # presence[a, c]: a + S が色 c を含むか
    presence = (seen[:, :, None] == np.arange(k)[None, None, :]).any(axis=1)

    violations = []
    for a in np.nonzero(~presence.all(axis=1))[0]:
        shift = int(a)
        violations.append(
            Violation(
                shift=shift,
                translate=residue_set.translate(shift),
                missing_colors=tuple(int(c) for c in np.nonzero(~presence[a])[0]),
            )
        )
    return violations


class _ColoringSearch:
    """
    連結な平行移動ハイパーグラフ上の k-彩色のバックトラック探索

    各平行移動について未彩色数と色ごとの出現数を差分更新し、欠けている色の数が
    未彩色数を超えた時点で枝刈りする。未彩色数が最小の平行移動から元を選ぶ
    """

    def __init__(self, n: int, elements: tuple[int, ...], k: int):
        self.n = n
        self.k = k
        self.members = [[(a + s) % n for s in elements] for a in range(n)]
        self.containing = [[(x - s) % n for s in elements] for x in range(n)]
        self.colors = [-1] * n
        self.uncolored = [len(elements)] * n
        self.counts = [[0] * k for _ in range(n)]
        self.missing = [k] * n
        self.nodes = 0

    def _assign(self, x: int, c: int) -> bool:
        self.colors[x] = c
        feasible = True
        for a in self.containing[x]:
            self.uncolored[a] -= 1
            if self.counts[a][c] == 0:
                self.missing[a] -= 1
            self.counts[a][c] += 1
            if self.missing[a] > self.uncolored[a]:
                feasible = False
        return feasible

    def _unassign(self, x: int, c: int) -> None:
        self.colors[x] = -1
        for a in self.containing[x]:
            self.uncolored[a] += 1
            self.counts[a][c] -= 1
            if self.counts[a][c] == 0:
                self.missing[a] += 1

    def _pick(self) -> int:
        open_translates = [(u, a) for a, u in enumerate(self.uncolored) if u > 0]
        if not open_translates:
            return -1
        _, a = min(open_translates)
        return min(y for y in self.members[a] if self.colors[y] < 0)

    def _search(self, used: int) -> bool:
        x = self._pick()
        if x < 0:
            return True
        # 新しい色は未使用の最小インデックスのみ（色の置換による対称性を除く）
        for c in range(min(used + 1, self.k)):
            self.nodes += 1
            if self._assign(x, c) and self._search(max(used, c + 1)):
                return True
            self._unassign(x, c)
        return False

    def run(self) -> Optional[list[int]]:
        if self._search(0):
            return list(self.colors)
        return None


def find_polychromatic_coloring(n: int, residue_set: ResidueSet, k: int) -> Optional[Coloring]:
    """
    S-多色的な k-彩色を1つ探す

    平行移動ハイパーグラフの連結成分は S の差が生成する部分群の剰余類で、互いに平行移動で
    重なるため、gcd 簡約した集合上で1成分だけ探索し、結果を各成分に複製する

    Args:
        n: 法
        residue_set: 集合 S
        k: 色数

    Returns:
        Optional[Coloring]: 見つかった彩色（存在しなければNone）
    """
    chain, reduced = reduce_gcd(residue_set)
    components = n // reduced.modulus
    search = _ColoringSearch(reduced.modulus, reduced.elements, k)
    colors = search.run()
    logger.debug(
        f"彩色探索: n={n}, S={residue_set.to_text()}, k={k}, "
        f"components={components}, nodes={search.nodes}, found={colors is not None}"
    )
    if colors is None:
        return None
    return pull_back_through_chain(chain, Coloring(modulus=reduced.modulus, num_colors=k, colors=tuple(colors)))


def brute_force_poly(
    n: int,
    residue_set: ResidueSet,
    bound: Optional[int] = None,
) -> tuple[int, Coloring]:
    """
    全探索で多色数 p_n(S) と証拠彩色を求める

    k = |S| から 2 まで順に探索し、最初に彩色が存在した k を返す。
    k = |S| かつ |S| ∤ n' の場合は各平行移動が各色を1つずつ含むことから色クラスの大きさが
    揃わず、探索を省略する

    Args:
        n: 法
        residue_set: 集合 S
        bound: n の上限（省略時は settings.oracle_max_poly）

    Returns:
        tuple[int, Coloring]: 多色数と、その色数の証拠彩色

    Raises:
        SearchBoundExceededError: n が上限を超える場合
        InvalidInputError: 集合の法が n と一致しない場合
    """
    _check_same_modulus(n, residue_set)
    _check_bound(n, bound if bound is not None else settings.oracle_max_poly, "brute_force_poly")

    size = len(residue_set)
    reduced_modulus = reduce_gcd(residue_set)[1].modulus
    for k in range(size, 1, -1):
        if k == size and reduced_modulus % k != 0:
            continue
        coloring = find_polychromatic_coloring(n, residue_set, k)
        if coloring is not None:
            return k, coloring
    return 1, Coloring.constant(n)


def is_tiling(n: int, residue_set: ResidueSet, complement: ResidueSet) -> bool:
    """
    S ⊕ T = Z_n（すべての元が s + t の形にちょうど1通りに書ける）かを判定する

    Raises:
        InvalidInputError: 集合の法が n と一致しない場合
    """
    _check_same_modulus(n, residue_set, complement)
    sums = (np.asarray(residue_set.elements)[:, None] + np.asarray(complement.elements)[None, :]) % n
    return bool((np.bincount(sums.ravel(), minlength=n) == 1).all())


def find_complement(
    n: int,
    residue_set: ResidueSet,
    bound: Optional[int] = None,
) -> TileCertificate:
    """
    完全被覆探索で S ⊕ T = Z_n となる補集合 T を求める

    未被覆の最小元 x を次に覆う元として選び、x を含む平行移動 x − s を昇順に試す。
    見つかった T は 0 を含むよう平行移動して返す

    Args:
        n: 法
        residue_set: 集合 S
        bound: n の上限（省略時は settings.oracle_max_tile）

    Returns:
        TileCertificate: 補集合、または探索を網羅した非存在の記録

    Raises:
        SearchBoundExceededError: n が上限を超える場合
    """
    _check_same_modulus(n, residue_set)
    if n % len(residue_set) != 0:
        return TileCertificate(complement=None, exhausted=True)
    _check_bound(n, bound if bound is not None else settings.oracle_max_tile, "find_complement")

    elements = residue_set.elements
    covered = [False] * n
    chosen: list[int] = []
    nodes = 0

    def cover(remaining: int) -> bool:
        nonlocal nodes
        if remaining == 0:
            return True
        x = covered.index(False)
        for shift in sorted((x - s) % n for s in elements):
            cells = [(shift + s) % n for s in elements]
            if any(covered[c] for c in cells):
                continue
            nodes += 1
            for c in cells:
                covered[c] = True
            chosen.append(shift)
            if cover(remaining - len(cells)):
                return True
            chosen.pop()
            for c in cells:
                covered[c] = False
        return False

    found = cover(n)
    logger.debug(f"完全被覆探索: n={n}, S={residue_set.to_text()}, nodes={nodes}, found={found}")
    if not found:
        return TileCertificate(complement=None, exhausted=True)
    complement = ResidueSet.of(n, chosen)
    return TileCertificate(complement=complement.translate(-complement.elements[0]), exhausted=False)


def complement_closure_check(n: int, residue_set: ResidueSet, complement: ResidueSet) -> bool:
    """
    S = {0, a, b} の補集合 T について、x ∈ T ならば x + (a + b) ∈ T かを判定する

    Raises:
        InvalidInputError: S が 0 を含む3元集合でない場合、0 ∉ T の場合、または S ⊕ T ≠ Z_n の場合
    """
    if len(residue_set) != 3 or 0 not in residue_set:
        raise InvalidInputError(
            f"S は 0 を含む3元集合でなければなりません: {residue_set.to_text()}",
            error_code=ErrorCode.INVALID_RESIDUE_SET,
        )
    if 0 not in complement:
        raise InvalidInputError(f"T は 0 を含まなければなりません: {complement.to_text()}")
    if not is_tiling(n, residue_set, complement):
        raise InvalidInputError(f"S ⊕ T ≠ Z_{n}: S={residue_set.to_text()}, T={complement.to_text()}")
    _, a, b = residue_set.elements
    step = (a + b) % n
    return all((x + step) % n in complement for x in complement.elements)


def is_blocking(n: int, residue_set: ResidueSet, blocker: ResidueSet) -> bool:
    """
    すべての平行移動 a + S が T と交わるかを判定する

    Raises:
        InvalidInputError: 集合の法が n と一致しない場合
    """
    _check_same_modulus(n, residue_set, blocker)
    mask = np.zeros(n, dtype=bool)
    mask[list(blocker.elements)] = True
    return bool(mask[_translate_indices(n, residue_set)].any(axis=1).all())


def min_blocking_size(
    n: int,
    residue_set: ResidueSet,
    bound: Optional[int] = None,
) -> tuple[int, ResidueSet]:
    """
    最小ブロッキング集合を求める

    |T| を小さい順に増やし、辞書順で最初のブロッキング集合を返す。
    各元は |S| 個の平行移動にしか含まれないので |T| ≥ ⌈n / |S|⌉ から始め、
    最小のものの平行移動は 0 を含むので 0 を含む候補だけを調べる

    Args:
        n: 法
        residue_set: 集合 S
        bound: n の上限（省略時は settings.oracle_max_blocking）

    Returns:
        tuple[int, ResidueSet]: 最小サイズと辞書順最初の証拠

    Raises:
        SearchBoundExceededError: n が上限を超える場合
    """
    _check_same_modulus(n, residue_set)
    _check_bound(n, bound if bound is not None else settings.oracle_max_blocking, "min_blocking_size")

    translate_masks = [sum(1 << ((a + s) % n) for s in residue_set.elements) for a in range(n)]
    checked = 0
    for size in range(-(-n // len(residue_set)), n + 1):
        for rest in combinations(range(1, n), size - 1):
            checked += 1
            candidate = 1 | sum(1 << x for x in rest)
            if all(mask & candidate for mask in translate_masks):
                logger.debug(f"ブロッキング集合探索: n={n}, S={residue_set.to_text()}, checked={checked}")
                return size, ResidueSet.of(n, (0, *rest))
    # T = Z_n は常にブロッキング集合なので到達しない
    return n, ResidueSet.of(n, range(n))
