"""
Z_n 基盤モジュール

剰余集合の平行移動、部分群の位数、および3元集合の正規化（平行移動・単元倍・スケール除算）と
正規形上の彩色を元の集合へ引き戻す処理
"""
from math import gcd
from typing import Optional

import numpy as np

from app.constants.error_codes import ErrorCode
from app.exceptions import InvalidInputError
from app.models.coloring import Coloring
from app.models.residue import (
    CanonicalForm,
    CanonicalKind,
    ResidueSet,
    ScaleDivideStep,
    TransformChain,
    TranslateStep,
    UnitMultiplyStep,
)


def translates(residue_set: ResidueSet) -> list[ResidueSet]:
    """
    n 個の平行移動 a + S（a = 0..n−1）を返す

    重複は除かず、平行移動量 a の順に並べる

    Args:
        residue_set: 集合 S

    Returns:
        list[ResidueSet]: a 番目が a + S のリスト
    """
    return [residue_set.translate(a) for a in range(residue_set.modulus)]


def incidence_matrix(residue_set: ResidueSet) -> np.ndarray:
    """
    平行移動の接続行列（行 a が a + S の指示ベクトル）

    Args:
        residue_set: 集合 S

    Returns:
        np.ndarray: n×n の 0/1 行列
    """
    n = residue_set.modulus
    matrix = np.zeros((n, n), dtype=np.int64)
    shifts = np.arange(n)[:, None]
    columns = (shifts + np.asarray(residue_set.elements)[None, :]) % n
    np.put_along_axis(matrix, columns, 1, axis=1)
    return matrix


def subgroup_order(n: int, g: int) -> int:
    """
    巡回部分群 <g> ⊆ Z_n の位数 n / gcd(n, g)

    Args:
        n: 法
        g: 生成元（0 ≤ g < n）

    Returns:
        int: 位数（g = 0 のとき 1）

    Raises:
        InvalidInputError: g が [0, n) の範囲外の場合
    """
    if n < 1 or not 0 <= g < n:
        raise InvalidInputError(f"0 ≤ g < n を満たしません: n={n}, g={g}")
    return n // gcd(n, g)


def reduce_gcd(residue_set: ResidueSet) -> tuple[TransformChain, ResidueSet]:
    """
    最小元が 0 になるよう平行移動し、要素と法の公約数で割る

    Args:
        residue_set: 集合 S（任意の要素数）

    Returns:
        tuple[TransformChain, ResidueSet]: 適用したチェーンと簡約後の集合
    """
    chain = TransformChain.identity(residue_set.modulus)
    current = residue_set

    if current.elements[0] != 0:
        step = TranslateStep(shift=(-current.elements[0]) % current.modulus)
        chain = chain.then(step)
        current = current.translate(step.shift)

    g = current.modulus
    for e in current.elements:
        g = gcd(g, e)
    if g > 1:
        step_div = ScaleDivideStep(divisor=g)
        chain = chain.then(step_div)
        elements, modulus = step_div.apply(current.elements, current.modulus)
        current = ResidueSet(modulus=modulus, elements=elements)

    return chain, current


def normalize(residue_set: ResidueSet) -> CanonicalForm:
    """
    3元集合を正規形（CaseI または CaseII）に変換する

    1. 最小元を 0 に平行移動
    2. 要素と法の公約数 g で割る
    3. 非零元のうち法と互いに素なもの（小さい順に判定）があれば、その逆元を掛けて {0, 1, c} とし、
       c > ⌈n'/2⌉ なら −1 倍と +1 平行移動で c を n' − c + 1 に置き換える（CaseI）
    4. どちらも法と互いに素でなければ CaseII

    Args:
        residue_set: 3元集合

    Returns:
        CanonicalForm: 正規形と適用したチェーン

    Raises:
        InvalidInputError: 要素数が3でない場合
    """
    if len(residue_set) != 3:
        raise InvalidInputError(
            f"正規化は3元集合のみ対応しています: |S|={len(residue_set)}",
            error_code=ErrorCode.INVALID_RESIDUE_SET,
        )

    chain, current = reduce_gcd(residue_set)
    n = current.modulus

    unit = next((u for u in current.elements[1:] if gcd(u, n) == 1), None)
    if unit is None:
        return CanonicalForm(
            kind=CanonicalKind.CASE_II,
            reduced_modulus=n,
            reduced_set=current,
            chain=chain,
        )

    inverse = pow(unit, -1, n)
    if inverse != 1:
        chain = chain.then(UnitMultiplyStep(factor=inverse))
        current = current.multiply(inverse)

    c = current.elements[2]
    if c > (n + 1) // 2:
        # −1 倍で {0, n−1, n−c}、+1 平行移動で {0, 1, n−c+1}
        chain = chain.then(UnitMultiplyStep(factor=n - 1)).then(TranslateStep(shift=1))
        current = current.multiply(n - 1).translate(1)

    return CanonicalForm(
        kind=CanonicalKind.CASE_I,
        reduced_modulus=n,
        reduced_set=current,
        chain=chain,
    )


def pull_back_through_chain(chain: TransformChain, coloring: Coloring) -> Coloring:
    """
    変換後の法上の彩色を、チェーンを逆にたどって変換前の法上の彩色に引き戻す

    Args:
        chain: 変換チェーン
        coloring: target_modulus 上の彩色

    Returns:
        Coloring: source_modulus 上の彩色（色数は不変）

    Raises:
        InvalidInputError: 彩色の長さが target_modulus と一致しない場合
    """
    if coloring.modulus != chain.target_modulus:
        raise InvalidInputError(
            f"彩色の長さ {coloring.modulus} が簡約後の法 {chain.target_modulus} と一致しません",
            error_code=ErrorCode.INVALID_COLORING,
        )
    moduli = chain.moduli()
    colors = list(coloring.colors)
    for step, source_modulus in zip(reversed(chain.steps), reversed(moduli[:-1])):
        colors = step.pull_back(colors, source_modulus)
    return Coloring(modulus=chain.source_modulus, num_colors=coloring.num_colors, colors=tuple(colors))


def pull_back_coloring(form: CanonicalForm, coloring: Coloring) -> Coloring:
    """
    正規形上の彩色を元の集合の法上の彩色に引き戻す

    正規形に対して多色的な彩色は、元の集合に対しても多色的になる

    Args:
        form: 正規形
        coloring: 簡約後の法 n' 上の彩色

    Returns:
        Coloring: 元の法上の彩色
    """
    return pull_back_through_chain(form.chain, coloring)


def find_equivalence(source: ResidueSet, target: ResidueSet) -> Optional[TransformChain]:
    """
    target = d·source + c となる単元 d と平行移動 c を探す（d, c ともに小さい順）

    Args:
        source: 集合 S
        target: 集合 T（同じ法、同じ要素数）

    Returns:
        Optional[TransformChain]: 見つかった変換（恒等的なステップは省略）、なければNone
    """
    n = source.modulus
    if target.modulus != n or len(target) != len(source):
        return None
    wanted = set(target.elements)
    for d in range(1, max(n, 2)):
        if gcd(d, n) != 1:
            continue
        scaled = [(d * e) % n for e in source.elements]
        for c in range(n):
            if {(x + c) % n for x in scaled} == wanted:
                chain = TransformChain.identity(n)
                if d != 1:
                    chain = chain.then(UnitMultiplyStep(factor=d))
                if c != 0:
                    chain = chain.then(TranslateStep(shift=c))
                return chain
    return None
