import pytest
from pathlib import Path

FIXTURES_DIR = Path(__file__).parent / "fixtures"


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "integration: marks end-to-end CLI runs on the fixture system files",
    )
    config.addinivalue_line(
        "markers",
        "research: marks randomized acceptance sweeps (planted certificates, intersection axioms)",
    )


def make_system(p_text: str, q_text: str):
    from src.poly_parser import parse_poly
    from src.vector_field import make_field

    return make_field(parse_poly(p_text), parse_poly(q_text))


@pytest.fixture
def e1():
    """x' = 1 + y², y' = xy + y: three rational Darboux points, invariant line y = 0."""
    return make_system("1 + y^2", "x*y + y")


@pytest.fixture
def e2():
    """x' = 2y, y' = 3x²: Hamiltonian with first integral y² − x³."""
    return make_system("2*y", "3*x^2")


@pytest.fixture
def e3():
    """Invariant unit circle, dicritical at infinity."""
    return make_system("-y + x*(x^2 + y^2 - 1)", "x + y*(x^2 + y^2 - 1)")


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR
