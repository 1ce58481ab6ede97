"""
Pytest configuration and shared fixtures

This module contains pytest fixtures that are available to all test modules.
"""
import os
from typing import Callable, Generator

import pytest
from fastapi.testclient import TestClient

# Set test environment before importing app modules
os.environ["ENVIRONMENT"] = "local"
os.environ.pop("POLY_ORACLE_MAX", None)

from app.cli import main as cli_main  # noqa: E402
from app.config import Settings  # noqa: E402
from app.main import app  # noqa: E402
from app.services.polychromatic_service import PolychromaticService  # noqa: E402

CliResult = tuple[int, str, str]


@pytest.fixture(scope="function")
def test_settings() -> Settings:
    """
    Test settings fixture

    Pins the oracle bounds to their documented defaults so that tests do not
    depend on the environment or on local YAML edits.

    Returns:
        Settings: Test configuration settings
    """
    return Settings(
        environment="local",
        debug=True,
        log_level="DEBUG",
        oracle_max_poly=40,
        oracle_max_tile=60,
        oracle_max_blocking=24,
        table_oracle_max=30,
    )


@pytest.fixture(scope="function")
def service(test_settings: Settings) -> PolychromaticService:
    """
    Service fixture bound to the test settings

    Args:
        test_settings: Test settings fixture

    Returns:
        PolychromaticService: Service instance
    """
    return PolychromaticService(test_settings)


@pytest.fixture(scope="function")
def client() -> Generator[TestClient, None, None]:
    """
    FastAPI test client fixture

    Provides a test client for making HTTP requests to the API.

    Yields:
        TestClient: FastAPI test client
    """
    with TestClient(app) as test_client:
        yield test_client


@pytest.fixture(scope="function")
def run_cli(capsys: pytest.CaptureFixture[str]) -> Callable[..., CliResult]:
    """
    CLI runner fixture

    Invokes the command-line entry point in-process and returns the exit code
    together with the captured stdout and stderr. argparse usage errors are
    converted from SystemExit to their exit code.

    Args:
        capsys: pytest capture fixture

    Returns:
        Callable[..., CliResult]: runner taking the argument strings
    """
    def runner(*argv: str) -> CliResult:
        capsys.readouterr()
        try:
            code = cli_main(list(argv))
        except SystemExit as e:
            code = int(e.code) if e.code is not None else 0
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return runner
