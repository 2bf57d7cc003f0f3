import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finslerlab import (RIEMANNIAN, CovDerivData, InputError, Kropina, Randers,
                        SingularDirectionError, ab_scalars_kropina, s_curvature_generic,
                        s_curvature_kropina, s_curvature_local)
from finslerlab.curvature import s_curvature_along
from finslerlab.numdiff import ridders

from .conftest import abelian, positive_direction, random_spec


def local_data(n, r=None, s_mat=None, coeffs=None, b_upper=None, fb=0.0):
    z = np.zeros((n, n))
    return CovDerivData(r=z if r is None else r, s_mat=z if s_mat is None else s_mat,
                        r0_plus_s0_coeffs=np.zeros(n) if coeffs is None else coeffs,
                        b_upper=np.zeros(n) if b_upper is None else b_upper, fb_log_deriv=fb)


def test_local_zero_data_vanishes():
    sc = ab_scalars_kropina(2, 0.3, 0.25, 2)
    assert s_curvature_local(sc, local_data(2), [1.0, 0.5], 1.2) == 0.0


def test_local_riemannian_vanishes():
    from finslerlab import ab_scalars_generic
    sc = ab_scalars_generic(RIEMANNIAN, 0.3, 0.25, 2)
    data = local_data(2, r=np.eye(2), s_mat=np.array([[0, 1.0], [-1.0, 0]]),
                      coeffs=np.ones(2), b_upper=np.array([0.5, 0.0]))
    assert s_curvature_local(sc, data, [1.0, 0.5], 1.2) == 0.0


def test_local_kropina_by_hand():
    # y = (1, 1), alpha = sqrt 2, s = 1/(2 sqrt 2), b^2 = 1/4, r = I, s_ij = 0.
    # Q' = 16/3, Delta = 1, Phi/(2 Delta^2) = 64/(9 sqrt 2), r_0 + s_0 = b . y = 1/2, r_00 = 2:
    # S = (Q'/Delta) / 2 - (1/sqrt 2)(64/(9 sqrt 2)) 2 = 8/3 - 64/9 = -40/9
    s = 1 / (2 * math.sqrt(2))
    sc = ab_scalars_kropina(2, s, 0.25, 2)
    b = np.array([0.5, 0.0])
    data = local_data(2, r=np.eye(2), coeffs=b, b_upper=b)
    assert s_curvature_local(sc, data, [1.0, 1.0], math.sqrt(2)) == pytest.approx(-40 / 9, rel=1e-14)


def test_local_uses_s0_from_b_upper():
    s = 0.3
    sc = ab_scalars_kropina(3, s, 0.25, 2)
    sm = np.array([[0.0, 2.0], [-2.0, 0.0]])
    b = np.array([0.5, 0.0])
    data = local_data(2, s_mat=sm, b_upper=b)
    y = np.array([1.0, 0.7])
    alpha = np.linalg.norm(y)
    s0 = (b @ sm) @ y  # = 0.5 * 2 * 0.7
    expected = -sc.Phi / (2 * sc.Delta**2) / alpha * (-2 * alpha * sc.Q * s0)
    assert s_curvature_local(sc, data, y, alpha) == pytest.approx(expected, rel=1e-14)


def test_local_rejects_bad_data():
    with pytest.raises(InputError):
        local_data(2, r=np.array([[1.0, 2.0], [0.0, 1.0]]))
    sc = ab_scalars_kropina(2, 0.3, 0.25, 2)
    with pytest.raises(InputError):
        s_curvature_local(sc, local_data(2), [1.0, 0.0, 0.0], 1.0)


def test_solvable_example_is_16_over_9(solvable):
    assert s_curvature_generic(solvable, Kropina(2), [1.0, 1.0]) == pytest.approx(16 / 9, rel=1e-14)
    assert s_curvature_kropina(solvable, 2, [1.0, 1.0]) == pytest.approx(16 / 9, rel=1e-14)


@pytest.mark.parametrize("model", [Kropina(2), Randers(), RIEMANNIAN])
def test_abelian_vanishes(model):
    spec = abelian(3)
    assert s_curvature_generic(spec, model, [0.2, 1.0, -0.4]) == 0.0


def test_riemannian_vanishes_for_any_spec(rng):
    spec = random_spec(rng, 4)
    for y in rng.standard_normal((10, 4)):
        assert s_curvature_generic(spec, RIEMANNIAN, y) == 0.0


def test_singular_direction(solvable):
    with pytest.raises(SingularDirectionError):
        s_curvature_generic(solvable, Kropina(2), [0.0, 1.0])
    with pytest.raises(SingularDirectionError):
        s_curvature_kropina(solvable, 2, [0.0, 1.0])
    # Randers is regular there
    assert np.isfinite(s_curvature_generic(solvable, Randers(), [0.0, 1.0]))


def test_zero_direction(solvable):
    with pytest.raises(InputError):
        s_curvature_generic(solvable, Randers(), [0.0, 0.0])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([0.5, 2.0, 10.0]))
def test_positive_homogeneity(seed, lam):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 5))
    spec = random_spec(rng, n)
    y = positive_direction(spec, rng.standard_normal(n))
    for model in (Kropina(2.5), Randers()):
        s1 = s_curvature_generic(spec, model, y)
        assert s_curvature_generic(spec, model, lam * y) == pytest.approx(lam * s1, rel=1e-10, abs=1e-14)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10_000))
def test_closed_form_matches_generic(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 5))
    spec = random_spec(rng, n)
    m = float(rng.choice([-2.5, -0.5, 0.5, 2.0, 3.0]))
    y = positive_direction(spec, rng.standard_normal(n))
    a = s_curvature_kropina(spec, m, y)
    b = s_curvature_generic(spec, Kropina(m), y)
    assert abs(a - b) <= 1e-12 * (1 + abs(a))


def test_along_line_jet_matches_ridders(rng):
    spec = random_spec(rng, 3)
    y = positive_direction(spec, rng.standard_normal(3))
    d = rng.standard_normal(3)
    for model in (Kropina(2), Randers()):
        jet = s_curvature_along(spec, model, y, d)
        f = lambda t: s_curvature_generic(spec, model, y + t * d)
        assert jet.val == pytest.approx(f(0.0), rel=1e-14)
        assert jet.d1 == pytest.approx(ridders(f, 0.0, 1e-2, 1)[0], rel=1e-8)
        assert jet.d2 == pytest.approx(ridders(f, 0.0, 1e-2, 2)[0], rel=1e-7)
