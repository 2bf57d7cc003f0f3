import numpy as np
import pytest

from finslerlab import HomogeneousSpec


def solvable_2d():
    """[e1, e2] = e2, identity metric, v = (0.5, 0)."""
    return HomogeneousSpec.from_structure_constants(np.eye(2), [0.5, 0.0], {(0, 1): {1: 1.0}})


def abelian(n=3, v=None):
    v = np.full(n, 0.3) if v is None else np.asarray(v, dtype=float)
    return HomogeneousSpec(np.eye(n), np.zeros((n, n, n)), v)


def so3(v=(0.5, 0.0, 0.0)):
    return HomogeneousSpec.from_structure_constants(
        np.eye(3), v, {(0, 1): {2: 1.0}, (1, 2): {0: 1.0}, (0, 2): {1: -1.0}})


def random_spec(rng, n, b_range=(0.1, 0.95)):
    """Random SPD metric, antisymmetric bracket and v with b in ``b_range``."""
    a = rng.standard_normal((n, n))
    metric = a @ a.T + n * np.eye(n)
    c = rng.standard_normal((n, n, n))
    c = c - c.transpose(1, 0, 2)
    v = rng.standard_normal(n)
    v *= rng.uniform(*b_range) / np.sqrt(v @ metric @ v)
    return HomogeneousSpec(metric, c, v)


def positive_direction(spec, y):
    """Flip ``y`` so that beta(y) > 0."""
    return y if spec.v_lower @ y > 0 else -y


@pytest.fixture
def solvable():
    return solvable_2d()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
