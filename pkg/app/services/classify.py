"""
多色数分類モジュール

|S| = 2, 3 の多色数 p_n(S) を閉じた式で求める。mod 3 タイリング条件と、
素数冪サイズの整数集合が Z をタイルするかを判定する Newman 条件も提供する
"""
from itertools import combinations
from math import gcd
from typing import Sequence

from sympy import isprime
from sympy.ntheory import multiplicity

from app.constants.error_codes import ErrorCode
from app.exceptions import InvalidInputError
from app.models.classification import CaseTag, Classification
from app.models.residue import ResidueSet
from app.services.zn_core import find_equivalence, subgroup_order

# {0, 1, 3} ⊆ Z_7（Fano 平面の直線）
FANO_LINE = ResidueSet(modulus=7, elements=(0, 1, 3))


def _nonzero_elements(residue_set: ResidueSet, size: int) -> tuple[int, ...]:
    """
    最小元が 0 になるよう平行移動した集合の非零元を返す

    Raises:
        InvalidInputError: 要素数が size でない場合
    """
    if len(residue_set) != size:
        raise InvalidInputError(
            f"要素数 {size} の集合が必要です: |S|={len(residue_set)}",
            error_code=ErrorCode.INVALID_RESIDUE_SET,
        )
    shifted = residue_set.translate(-residue_set.elements[0])
    return shifted.elements[1:]


def poly_number_size2(n: int, residue_set: ResidueSet) -> Classification:
    """
    2元集合 {0, b} の多色数

    平行移動はすべて <b> の剰余類の中にあるので、|<b>| が偶数なら 2、奇数なら 1

    Args:
        n: 法
        residue_set: 2元集合

    Returns:
        Classification: Size2Even（p=2）または Size2Odd（p=1）

    Raises:
        InvalidInputError: 2元集合でない場合、または法が一致しない場合
    """
    _check_modulus(n, residue_set)
    (b,) = _nonzero_elements(residue_set, 2)
    order = subgroup_order(n, b)
    if order % 2 == 0:
        return Classification(p=2, case_tag=CaseTag.SIZE2_EVEN, detail={"b": b, "order": order})
    return Classification(p=1, case_tag=CaseTag.SIZE2_ODD, detail={"b": b, "order": order})


def _mod3_tiling_parameters(n: int, a: int, b: int) -> dict[str, int] | None:
    """
    n ≡ 0 (mod 3^{j+1})、a = 3^j·m_a、b = 3^j·m_b、m_a, m_b ≢ 0、m_a + m_b ≡ 0 (mod 3) を判定する

    Returns:
        dict[str, int] | None: 成立する場合は j, m_a, m_b、しなければNone
    """
    j = multiplicity(3, a)
    if multiplicity(3, b) != j:
        return None
    if n % 3 ** (j + 1) != 0:
        return None
    m_a, m_b = a // 3**j, b // 3**j
    if (m_a + m_b) % 3 != 0:
        return None
    return {"j": j, "m_a": m_a, "m_b": m_b}


def _fano_generator(n: int, a: int, b: int) -> int | None:
    """
    7 | n、|<a>| = 7、b ≡ 3a または 5a (mod n) を判定する（a と b を入れ替えても判定）

    Returns:
        int | None: 位数7の生成元（成立しなければNone）
    """
    if n % 7 != 0:
        return None
    for g, other in ((a, b), (b, a)):
        if subgroup_order(n, g) == 7 and other in ((3 * g) % n, (5 * g) % n):
            return g
    return None


def poly_number_size3(n: int, residue_set: ResidueSet) -> Classification:
    """
    3元集合 {0, a, b} の多色数

    - 3: n ≡ 0 (mod 3^{j+1})、a = 3^j·m_a、b = 3^j·m_b、m_a + m_b ≡ 0 (mod 3)
    - 1: 7 | n、|<a>| = 7、b ≡ 3a または 5a（a, b の向きは問わない）
    - 2: それ以外

    0 を含まない集合は最小元が 0 になるよう平行移動してから判定する

    Args:
        n: 法
        residue_set: 3元集合

    Returns:
        Classification: 分類結果

    Raises:
        InvalidInputError: 3元集合でない場合、または法が一致しない場合
    """
    _check_modulus(n, residue_set)
    a, b = _nonzero_elements(residue_set, 3)

    params = _mod3_tiling_parameters(n, a, b)
    if params is not None:
        return Classification(p=3, case_tag=CaseTag.MOD3_TILING, detail=params)

    generator = _fano_generator(n, a, b)
    if generator is not None:
        return Classification(p=1, case_tag=CaseTag.FANO_CASE, detail={"generator": generator})

    return Classification(p=2, case_tag=CaseTag.GENERIC_TWO, detail={"a": a, "b": b})


def poly_number(n: int, residue_set: ResidueSet) -> Classification:
    """
    要素数に応じて poly_number_size2 / poly_number_size3 を呼び分ける

    Raises:
        InvalidInputError: 要素数が 2, 3 以外の場合
    """
    if len(residue_set) == 2:
        return poly_number_size2(n, residue_set)
    if len(residue_set) == 3:
        return poly_number_size3(n, residue_set)
    raise InvalidInputError(
        f"閉じた式は |S| = 2, 3 のみ対応しています: |S|={len(residue_set)}",
        error_code=ErrorCode.INVALID_RESIDUE_SET,
    )


def mod3_condition(n: int, a: int, b: int) -> bool:
    """
    3 | n かつ {a mod 3, b mod 3} = {1, 2} を判定する

    Args:
        n: 法
        a: 剰余
        b: 剰余

    Returns:
        bool: 条件が成り立つか

    Raises:
        InvalidInputError: gcd(a, b, n) ≠ 1 の場合
    """
    if gcd(gcd(a, b), n) != 1:
        raise InvalidInputError(f"gcd({a}, {b}, {n}) ≠ 1 です")
    return n % 3 == 0 and {a % 3, b % 3} == {1, 2}


def poly_number_reduced(n: int, residue_set: ResidueSet) -> Classification:
    """
    gcd 簡約済みの3元集合の多色数

    - 3: mod3_condition が成り立つ
    - 1: n = 7 かつ {0, 1, 3} と同値
    - 2: それ以外

    Raises:
        InvalidInputError: 3元集合でない場合、または gcd(a, b, n) ≠ 1 の場合
    """
    _check_modulus(n, residue_set)
    a, b = _nonzero_elements(residue_set, 3)
    if mod3_condition(n, a, b):
        return Classification(
            p=3,
            case_tag=CaseTag.MOD3_TILING,
            detail={"j": 0, "m_a": a, "m_b": b},
        )
    if n == 7:
        chain = find_equivalence(FANO_LINE, residue_set)
        if chain is not None:
            generator = next(g for g, other in ((a, b), (b, a)) if other in ((3 * g) % 7, (5 * g) % 7))
            return Classification(p=1, case_tag=CaseTag.FANO_CASE, detail={"generator": generator})
    return Classification(p=2, case_tag=CaseTag.GENERIC_TWO, detail={"a": a, "b": b})


def newman_valuations(values: Sequence[int], p: int) -> set[int]:
    """差 s_i − s_j（i < j）の p 進付値の集合"""
    return {multiplicity(p, abs(x - y)) for x, y in combinations(values, 2)}


def newman_tiles_z(values: Sequence[int], p: int, alpha: int) -> bool:
    """
    |S| = p^α の整数集合が Z を平行移動でタイルするか（Newman の条件）

    差の p 進付値が高々 α 種類であればタイルする

    Args:
        values: 相異なる整数の列
        p: 素数
        alpha: 正の整数

    Returns:
        bool: タイルするか

    Raises:
        InvalidInputError: p が素数でない、α < 1、|S| ≠ p^α、または重複がある場合
    """
    if not isprime(p):
        raise InvalidInputError(f"p={p} は素数ではありません")
    if alpha < 1:
        raise InvalidInputError(f"alpha={alpha} は正の整数ではありません")
    if len(set(values)) != len(values):
        raise InvalidInputError(f"{list(values)} に重複があります", error_code=ErrorCode.INVALID_RESIDUE_SET)
    if len(values) != p**alpha:
        raise InvalidInputError(f"|S|={len(values)} は {p}^{alpha}={p**alpha} と一致しません")
    return len(newman_valuations(values, p)) <= alpha


def _check_modulus(n: int, residue_set: ResidueSet) -> None:
    if residue_set.modulus != n:
        raise InvalidInputError(
            f"集合の法 {residue_set.modulus} が n={n} と一致しません",
            error_code=ErrorCode.INVALID_RESIDUE_SET,
        )
