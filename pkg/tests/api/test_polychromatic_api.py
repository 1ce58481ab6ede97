"""
Tests for the polychromatic API endpoints

Tests the JSON surface over the service and the unified error responses
"""
from fastapi import status

from app.config import settings
from app.constants.error_codes import ErrorCode


def test_health(client):
    """
    Test the health check endpoint

    Should return 200 with a healthy status and the configured project name
    """
    response = client.get("/health")

    assert response.status_code == status.HTTP_200_OK
    assert response.json()["status"] == "healthy"
    assert response.json()["project"] == settings.project_name


def test_pnum(client):
    """
    Test GET /polychromatic/pnum on {0,1,2} in Z_9

    Should return the number and the case tag with the set under its alias
    """
    response = client.get("/polychromatic/pnum", params={"n": 9, "set": "0,1,2"})

    body = response.json()
    assert response.status_code == status.HTTP_200_OK
    assert body["code"] == 200
    assert body["data"]["p"] == 3
    assert body["data"]["case_tag"] == "Mod3Tiling"
    assert body["data"]["set"] == [0, 1, 2]


def test_pnum_oracle(client):
    """
    Test GET /polychromatic/pnum with method=oracle

    Should return the brute-force number
    """
    response = client.get("/polychromatic/pnum", params={"n": 7, "set": "0,1,3", "method": "oracle"})

    assert response.status_code == status.HTTP_200_OK
    assert response.json()["data"]["p"] == 1
    assert response.json()["data"]["method"] == "oracle"


def test_witness(client):
    """
    Test GET /polychromatic/witness on {0,1,3} in Z_11

    Should return the blocks coloring
    """
    response = client.get("/polychromatic/witness", params={"n": 11, "set": "0,1,3", "verify": True})

    data = response.json()["data"]
    assert response.status_code == status.HTTP_200_OK
    assert data["p"] == 2
    assert data["witness"] == "00111000111"


def test_verify_ok(client):
    """
    Test POST /polychromatic/verify with a polychromatic coloring

    Should report ok with no violations
    """
    response = client.post(
        "/polychromatic/verify",
        json={"n": 9, "set": "0,1,2", "coloring": "RBYRBYRBY", "colors": 3},
    )

    data = response.json()["data"]
    assert response.status_code == status.HTTP_200_OK
    assert data["ok"] is True
    assert data["violations"] == []


def test_verify_violation(client):
    """
    Test POST /polychromatic/verify with a violating coloring

    Should return 200 and list the violation as a result
    """
    response = client.post(
        "/polychromatic/verify",
        json={"n": 7, "set": "0,1,3", "coloring": "0101010", "colors": 2},
    )

    data = response.json()["data"]
    assert response.status_code == status.HTTP_200_OK
    assert data["ok"] is False
    assert data["violations"] == [{"shift": 6, "translate": [0, 2, 6], "missing_colors": [1]}]


def test_oracle(client):
    """
    Test GET /polychromatic/oracle on {0,1,3} in Z_11

    Should return p = 2 with a witness of length 11
    """
    response = client.get("/polychromatic/oracle", params={"n": 11, "set": "0,1,3"})

    data = response.json()["data"]
    assert response.status_code == status.HTTP_200_OK
    assert data["p"] == 2
    assert len(data["witness"]) == 11


def test_tile(client):
    """
    Test GET /polychromatic/tile on {0,1,2} in Z_9

    Should return the complement {0,3,6} and a passing closure check
    """
    response = client.get("/polychromatic/tile", params={"n": 9, "set": "0,1,2"})

    data = response.json()["data"]
    assert response.status_code == status.HTTP_200_OK
    assert data["found"] is True
    assert data["complement"] == [0, 3, 6]
    assert data["closure"] is True


def test_newman(client):
    """
    Test GET /polychromatic/newman on {0,3,6}

    Should report a tiling of Z
    """
    response = client.get("/polychromatic/newman", params={"set": "0,3,6", "p": 3, "alpha": 1})

    data = response.json()["data"]
    assert response.status_code == status.HTTP_200_OK
    assert data["tiles"] is True
    assert data["valuations"] == [1]


def test_blocking(client):
    """
    Test GET /polychromatic/blocking on the Fano line

    Should return a minimum blocking set of size 3
    """
    response = client.get("/polychromatic/blocking", params={"n": 7, "set": "0,1,3"})

    assert response.status_code == status.HTTP_200_OK
    assert response.json()["data"]["size"] == 3


def test_invalid_set(client):
    """
    Test GET /polychromatic/pnum with repeated residues

    Should return 400 with INVALID_RESIDUE_SET
    """
    response = client.get("/polychromatic/pnum", params={"n": 9, "set": "0,9,2"})

    body = response.json()
    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert body["error"]["error_code"] == ErrorCode.INVALID_RESIDUE_SET.value


def test_bound_exceeded(client):
    """
    Test GET /polychromatic/oracle far above the search bound

    Should return 400 with SEARCH_BOUND_EXCEEDED
    """
    response = client.get("/polychromatic/oracle", params={"n": 500, "set": "0,1,3"})

    assert response.status_code == status.HTTP_400_BAD_REQUEST
    assert response.json()["error"]["error_code"] == ErrorCode.SEARCH_BOUND_EXCEEDED.value


def test_missing_parameter(client):
    """
    Test GET /polychromatic/pnum without n

    Should return 422 with VALIDATION_ERROR
    """
    response = client.get("/polychromatic/pnum", params={"set": "0,1,2"})

    assert response.status_code == status.HTTP_422_UNPROCESSABLE_ENTITY
    assert response.json()["error"]["error_code"] == ErrorCode.VALIDATION_ERROR.value
