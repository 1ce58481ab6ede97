"""
多色数APIエンドポイント

多色数の分類・証拠彩色・検証・全探索をJSONで提供するAPI
"""
from typing import Literal

from fastapi import APIRouter, Depends, Query

from app.constants.error_codes import SuccessMessage
from app.schemas.report import BlockingReport, NewmanReport, RunReport, TileReport, VerifyReport, VerifyRequest
from app.schemas.response import ApiResponse
from app.services.polychromatic_service import PolychromaticService
from app.utils.logger import get_logger

logger = get_logger(__name__)

router = APIRouter(prefix="/polychromatic", tags=["多色彩色"])


def get_service() -> PolychromaticService:
    """
    サービスインスタンスを取得する

    Returns:
        PolychromaticService: サービスインスタンス
    """
    return PolychromaticService()


@router.get(
    "/pnum",
    response_model=ApiResponse[RunReport],
    response_model_by_alias=True,
    summary="多色数計算",
    description="閉じた式または全探索で多色数 p_n(S) を求めます"
)
def get_poly_number(
    n: int = Query(..., ge=1, description="法 n"),
    residues: str = Query(..., alias="set", description="カンマ区切りの剰余（例: 0,1,3）"),
    method: Literal["closed_form", "oracle"] = Query("closed_form", description="計算方法"),
    service: PolychromaticService = Depends(get_service)
) -> ApiResponse[RunReport]:
    result = service.poly_number(n, service.parse_set(n, residues), method=method)
    return ApiResponse.success(data=result, message=SuccessMessage.POLY_NUMBER_COMPUTED)


@router.get(
    "/witness",
    response_model=ApiResponse[RunReport],
    response_model_by_alias=True,
    summary="証拠彩色構成",
    description="多色数をちょうど p 色で実現する彩色を構成します"
)
def get_witness(
    n: int = Query(..., ge=1, description="法 n"),
    residues: str = Query(..., alias="set", description="カンマ区切りの剰余（例: 0,1,3）"),
    verify: bool = Query(False, description="構成後に全平行移動を検証する"),
    service: PolychromaticService = Depends(get_service)
) -> ApiResponse[RunReport]:
    result = service.build_witness(n, service.parse_set(n, residues), verify=verify)
    return ApiResponse.success(data=result, message=SuccessMessage.WITNESS_CONSTRUCTED)


@router.post(
    "/verify",
    response_model=ApiResponse[VerifyReport],
    response_model_by_alias=True,
    summary="彩色検証",
    description="彩色が S-多色的か検証します（違反はエラーではなく結果として返します）"
)
def post_verify(
    request: VerifyRequest,
    service: PolychromaticService = Depends(get_service)
) -> ApiResponse[VerifyReport]:
    """
    彩色を検証する

    Args:
        request: 検証リクエスト
        service: サービスインスタンス

    Returns:
        ApiResponse[VerifyReport]: 検証結果
    """
    residue_set = service.parse_set(request.n, request.residue_set)
    result = service.verify_coloring(request.n, residue_set, request.coloring, request.colors)
    return ApiResponse.success(data=result, message=SuccessMessage.COLORING_VERIFIED)


@router.get(
    "/oracle",
    response_model=ApiResponse[RunReport],
    response_model_by_alias=True,
    summary="全探索",
    description="全探索で多色数と証拠彩色を求めます"
)
def get_oracle(
    n: int = Query(..., ge=1, description="法 n"),
    residues: str = Query(..., alias="set", description="カンマ区切りの剰余（例: 0,1,3）"),
    service: PolychromaticService = Depends(get_service)
) -> ApiResponse[RunReport]:
    result = service.run_oracle(n, service.parse_set(n, residues))
    return ApiResponse.success(data=result, message=SuccessMessage.ORACLE_COMPLETED)


@router.get(
    "/tile",
    response_model=ApiResponse[TileReport],
    response_model_by_alias=True,
    summary="タイリング探索",
    description="S ⊕ T = Z_n となる補集合 T を探します"
)
def get_tile(
    n: int = Query(..., ge=1, description="法 n"),
    residues: str = Query(..., alias="set", description="カンマ区切りの剰余（例: 0,1,3）"),
    service: PolychromaticService = Depends(get_service)
) -> ApiResponse[TileReport]:
    result = service.search_tiling(n, service.parse_set(n, residues))
    return ApiResponse.success(data=result, message=SuccessMessage.TILING_SEARCHED)


@router.get(
    "/newman",
    response_model=ApiResponse[NewmanReport],
    response_model_by_alias=True,
    summary="Newman条件判定",
    description="|S| = p^α の整数集合が Z をタイルするか判定します"
)
def get_newman(
    residues: str = Query(..., alias="set", description="カンマ区切りの剰余（例: 0,1,3）"),
    p: int = Query(..., description="素数 p"),
    alpha: int = Query(..., description="指数 α"),
    service: PolychromaticService = Depends(get_service)
) -> ApiResponse[NewmanReport]:
    result = service.check_newman(service.parse_integers(residues), p, alpha)
    return ApiResponse.success(data=result, message=SuccessMessage.NEWMAN_CHECKED)


@router.get(
    "/blocking",
    response_model=ApiResponse[BlockingReport],
    response_model_by_alias=True,
    summary="最小ブロッキング集合探索",
    description="すべての平行移動と交わる最小の集合を探します"
)
def get_blocking(
    n: int = Query(..., ge=1, description="法 n"),
    residues: str = Query(..., alias="set", description="カンマ区切りの剰余（例: 0,1,3）"),
    service: PolychromaticService = Depends(get_service)
) -> ApiResponse[BlockingReport]:
    result = service.search_blocking(n, service.parse_set(n, residues))
    return ApiResponse.success(data=result, message=SuccessMessage.BLOCKING_SEARCHED)
