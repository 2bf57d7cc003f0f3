import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from finslerlab import HomogeneousSpec, InputError, alpha_beta_s, bracket_m, validate_spec

from .conftest import random_spec

vec3 = arrays(float, 3, elements=st.floats(-10, 10))


def test_valid_spec_passes():
    spec = HomogeneousSpec(np.eye(2), np.zeros((2, 2, 2)), [0.5, 0.0])
    assert validate_spec(spec).ok


def test_negative_eigenvalue_fails():
    spec = HomogeneousSpec(np.diag([1.0, -1.0]), np.zeros((2, 2, 2)), [0.5, 0.0])
    report = validate_spec(spec)
    assert not report.ok
    assert report.first_failure.message == "metric not positive definite"


def test_b_not_below_one_fails():
    spec = HomogeneousSpec(np.eye(2), np.zeros((2, 2, 2)), [1.1, 0.0])  # <v, v> = 1.21
    report = validate_spec(spec)
    assert report.first_failure.message.startswith("b >= 1")


def test_zero_v_fails():
    spec = HomogeneousSpec(np.eye(2), np.zeros((2, 2, 2)), [0.0, 0.0])
    assert not validate_spec(spec).ok


def test_non_antisymmetric_bracket_reported_with_index():
    c = np.zeros((2, 2, 2))
    c[0, 1, 1] = 1.0  # missing c[1, 0, 1] = -1
    report = validate_spec(HomogeneousSpec(np.eye(2), c, [0.5, 0.0]))
    assert report.first_failure.message == "bracket not antisymmetric at (1, 2, 2)"


def test_asymmetric_metric_reported():
    g = np.array([[1.0, 0.1], [0.0, 1.0]])
    report = validate_spec(HomogeneousSpec(g, np.zeros((2, 2, 2)), [0.5, 0.0]))
    assert "not symmetric" in report.first_failure.message


def test_shape_mismatch_is_input_error():
    with pytest.raises(InputError):
        HomogeneousSpec(np.eye(3), np.zeros((2, 2, 2)), [0.5, 0.0])


def test_spec_is_immutable(solvable):
    with pytest.raises(ValueError):
        solvable.metric[0, 0] = 2.0


def test_bracket_table_reading(solvable):
    e1, e2 = np.eye(2)
    assert np.array_equal(bracket_m(solvable, e1, e2), e2)
    assert np.array_equal(bracket_m(solvable, e2, e1), -e2)
    zero = HomogeneousSpec(np.eye(2), np.zeros((2, 2, 2)), [0.5, 0.0])
    assert np.array_equal(bracket_m(zero, [1.0, 2.0], [3.0, -1.0]), [0.0, 0.0])


def test_bracket_dimension_mismatch(solvable):
    with pytest.raises(InputError):
        bracket_m(solvable, [1.0, 0.0, 0.0], [0.0, 1.0])


@settings(max_examples=50)
@given(vec3, vec3)
def test_bracket_antisymmetric(x, y):
    spec = random_spec(np.random.default_rng(3), 3)
    assert np.allclose(bracket_m(spec, x, y), -bracket_m(spec, y, x), rtol=0, atol=1e-12)


def test_alpha_beta_s_examples():
    spec = HomogeneousSpec(np.eye(2), np.zeros((2, 2, 2)), [0.5, 0.0])
    alpha, beta, s = alpha_beta_s(spec, [1.0, 1.0])
    assert (alpha, beta, s) == pytest.approx((np.sqrt(2), 0.5, 0.5 / np.sqrt(2)), rel=1e-15)
    assert alpha_beta_s(spec, [0.0, 3.0])[1:] == (0.0, 0.0)
    assert alpha_beta_s(spec, spec.v)[2] == pytest.approx(spec.b, rel=1e-15)


def test_zero_direction_rejected(solvable):
    with pytest.raises(InputError):
        alpha_beta_s(solvable, [0.0, 0.0])


@settings(max_examples=100)
@given(vec3.filter(lambda y: np.linalg.norm(y) > 1e-3), st.floats(0.01, 100))
def test_s_bounded_and_homogeneous(y, lam):
    spec = random_spec(np.random.default_rng(7), 3)
    alpha, beta, s = alpha_beta_s(spec, y)
    assert abs(s) <= spec.b + 1e-12
    a2, b2, s2 = alpha_beta_s(spec, lam * y)
    assert a2 == pytest.approx(lam * alpha, rel=1e-12)
    assert b2 == pytest.approx(lam * beta, rel=1e-12, abs=1e-12)
    assert s2 == pytest.approx(s, rel=1e-12, abs=1e-15)
