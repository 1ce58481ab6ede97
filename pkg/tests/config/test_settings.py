"""
Tests for Settings

Tests YAML layering and the POLY_ORACLE_MAX override
"""
import pytest

from app.config import Settings
from app.constants.error_codes import ErrorCode
from app.exceptions import PolychromaticError


def test_default_bounds():
    """
    Test Settings in the local environment

    Should load the oracle bounds from the common YAML
    """
    settings = Settings(environment="local")

    assert settings.oracle_max_poly == 40
    assert settings.oracle_max_tile == 60
    assert settings.oracle_max_blocking == 24
    assert settings.table_oracle_max == 30


def test_prod_overrides():
    """
    Test Settings in the prod environment

    Should take the smaller bounds and the log file from the prod YAML
    """
    settings = Settings(environment="prod")

    assert settings.oracle_max_poly == 30
    assert settings.oracle_max_tile == 48
    assert settings.oracle_max_blocking == 20
    assert settings.log_file == "logs/app.log"
    assert settings.is_prod


def test_server_and_project_settings():
    """
    Test the server and project settings in the local and ci environments

    Should share host and port from the common YAML and take the project name from each environment YAML
    """
    local = Settings(environment="local")
    ci = Settings(environment="ci")

    assert (local.host, local.port) == ("127.0.0.1", 8080)
    assert (ci.host, ci.port) == ("127.0.0.1", 8080)
    assert local.project_name == "polychromatic-zn-local"
    assert ci.project_name == "polychromatic-zn-ci"
    assert local.is_local
    assert not ci.is_local
    assert not ci.is_prod


def test_oracle_max_override(monkeypatch):
    """
    Test POLY_ORACLE_MAX set to a positive integer

    Should override all three oracle bounds
    """
    monkeypatch.setenv("POLY_ORACLE_MAX", "20")

    settings = Settings(environment="local")

    assert settings.oracle_max_poly == 20
    assert settings.oracle_max_tile == 20
    assert settings.oracle_max_blocking == 20


def test_explicit_argument_beats_override(monkeypatch):
    """
    Test POLY_ORACLE_MAX together with an explicit bound

    Should keep the explicit keyword argument
    """
    monkeypatch.setenv("POLY_ORACLE_MAX", "20")

    settings = Settings(environment="local", oracle_max_tile=50)

    assert settings.oracle_max_tile == 50
    assert settings.oracle_max_poly == 20


@pytest.mark.parametrize("value", ["abc", "0", "-3"])
def test_invalid_override(monkeypatch, value):
    """
    Test POLY_ORACLE_MAX set to something other than a positive integer

    Should raise PolychromaticError with CONFIG_ERROR
    """
    monkeypatch.setenv("POLY_ORACLE_MAX", value)

    with pytest.raises(PolychromaticError) as exc_info:
        Settings(environment="local")

    assert exc_info.value.error_code == ErrorCode.CONFIG_ERROR
