import itertools
import math
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.core.forecast_panel import TrainingSet
from src.core.quantile_grid import build_quantile_grid
from src.core.stack_exception import StackException
from src.qlr.qlr import CoefficientVector, pinball, fit_qlr, fit_qlr_path, qlr_predict, qlr_quantiles, pinball_objective


def _intercept_only(targets) -> TrainingSet:
    targets = np.asarray(targets, dtype=float)
    return TrainingSet(np.empty((len(targets), 0)), targets, np.arange(len(targets)))


def test_pinball_examples():
    assert pinball(10.0, 8.0, 0.9) == pytest.approx(1.8)
    assert pinball(8.0, 10.0, 0.9) == pytest.approx(0.2)
    assert pinball(5.0, 5.0, 0.3) == 0.0
    assert pinball(np.array([10.0, 8.0]), np.array([8.0, 10.0]), 0.9) == pytest.approx([1.8, 0.2])


def test_pinball_needs_a_probability():
    with pytest.raises(StackException):
        pinball(1.0, 2.0, 1.0)


def test_pinball_takes_one_probability_per_quantile():
    losses = pinball(100.0, np.array([90.0, 100.0, 110.0]), np.array([0.1, 0.5, 0.9]))

    assert losses == pytest.approx([1.0, 0.0, 1.0])

    with pytest.raises(StackException):
        pinball(100.0, np.array([90.0, 110.0]), np.array([0.5, 1.0]))


def test_predict_is_an_affine_map():
    assert qlr_predict(CoefficientVector(5.0, [0.0, 0.0], 0.5), [7.0, 9.0]) == 5.0
    assert qlr_predict(CoefficientVector(0.0, [1.0, 1.0], 0.5), [2.0, 3.0]) == 5.0


def test_intercept_only_median():
    coeffs = fit_qlr(_intercept_only([1.0, 2.0, 3.0]), 0.5)

    assert coeffs.a0 == pytest.approx(2.0, abs=1e-9)
    assert len(coeffs.a) == 0


def test_intercept_only_matches_empirical_quantiles():
    targets = np.random.default_rng(0).normal(1000.0, 50.0, 100)
    ordered = np.sort(targets)
    train = _intercept_only(targets)

    # with N=100 every N*alpha is an integer h, so any value
    # between the h-th and (h+1)-th order statistic is optimal
    for h in range(1, 100):
        a0 = fit_qlr(train, h / 100).a0
        assert ordered[h - 1] - 1e-6 <= a0 <= ordered[h] + 1e-6


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 40), st.integers(1, 99))
def test_intercept_only_subgradient_certificate(seed, size, hundredths):
    alpha = hundredths / 100
    targets = np.random.default_rng(seed).integers(0, 30, size).astype(float)
    a0 = fit_qlr(_intercept_only(targets), alpha).a0
    residuals = targets - a0

    assert np.sum(residuals < -1e-7) * 100 <= size * hundredths
    assert np.sum(residuals <= 1e-7) * 100 >= size * hundredths


def test_linear_data_is_reproduced_for_every_alpha(make_train):
    x = np.arange(1.0, 11.0)
    train = make_train(x, 3.0 * x + 1.0)

    for alpha in (0.01, 0.25, 0.5, 0.9, 0.99):
        coeffs = fit_qlr(train, alpha)
        assert coeffs.a0 == pytest.approx(1.0, abs=1e-7)
        assert coeffs.a[0] == pytest.approx(3.0, abs=1e-8)
        assert pinball_objective(train, coeffs) == pytest.approx(0.0, abs=1e-7)


def test_linear_data_quantiles_collapse_on_the_truth(make_train):
    rng = np.random.default_rng(2)
    inputs = rng.normal(100.0, 10.0, (30, 2))
    targets = 0.4 * inputs[:, 0] + 0.6 * inputs[:, 1] + 5.0
    qf = qlr_quantiles(make_train(inputs, targets), [100.0, 110.0], build_quantile_grid())

    assert np.allclose(qf.quantiles, 0.4 * 100.0 + 0.6 * 110.0 + 5.0, atol=1e-6)


# every optimal line for n=1 passes through two sample points
def _best_pair_objective(x, y, alpha):
    best = math.inf
    for i, j in itertools.combinations(range(len(x)), 2):
        if x[i] == x[j]:
            continue
        slope = (y[j] - y[i]) / (x[j] - x[i])
        intercept = y[i] - slope * x[i]
        best = min(best, float(np.sum(pinball(y, intercept + slope * x, alpha))))
    return best


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(3, 8), st.integers(1, 99))
def test_objective_matches_pair_enumeration(seed, size, hundredths):
    rng = np.random.default_rng(seed)
    x = rng.permutation(np.arange(size) * 1.5 + rng.uniform(0, 1))
    y = 2.0 * x + rng.normal(0.0, 3.0, size)
    alpha = hundredths / 100

    train = TrainingSet(x.reshape(-1, 1), y, np.arange(size))
    achieved = pinball_objective(train, fit_qlr(train, alpha))
    best = _best_pair_objective(x, y, alpha)

    assert achieved == pytest.approx(best, rel=1e-8, abs=1e-9)


def test_median_fit_beats_least_squares(make_train):
    rng = np.random.default_rng(4)
    inputs = rng.normal(0.0, 1.0, (60, 2))
    targets = inputs @ [1.5, -0.5] + rng.standard_t(2, 60)
    train = make_train(inputs, targets)

    design = np.hstack([np.ones((60, 1)), inputs])
    ls = np.linalg.lstsq(design, targets, rcond=None)[0]
    ls_coeffs = CoefficientVector(ls[0], ls[1:], 0.5)

    assert pinball_objective(train, fit_qlr(train, 0.5)) <= pinball_objective(train, ls_coeffs) + 1e-9


def test_perturbing_a_coefficient_never_helps(make_train):
    rng = np.random.default_rng(5)
    inputs = rng.normal(50.0, 5.0, (40, 2))
    train = make_train(inputs, inputs.sum(axis=1) + rng.normal(0, 2, 40))
    coeffs = fit_qlr(train, 0.3)
    objective = pinball_objective(train, coeffs)

    for position in range(3):
        for step in (-1e-4, 1e-4):
            values = np.concatenate([[coeffs.a0], coeffs.a])
            values[position] += step * max(1.0, abs(values[position]))
            moved = CoefficientVector(values[0], values[1:], 0.3)
            assert pinball_objective(train, moved) >= objective - 1e-8 * objective


def test_predictions_follow_affine_changes_of_the_targets(make_train):
    rng = np.random.default_rng(6)
    inputs = rng.normal(10.0, 2.0, (25, 1))
    targets = 2.0 * inputs[:, 0] + rng.normal(0.0, 1.0, 25)
    query = [11.0]

    base = qlr_predict(fit_qlr(make_train(inputs, targets), 0.7), query)
    scaled = qlr_predict(fit_qlr(make_train(inputs, 3.0 * targets), 0.7), query)
    shifted = qlr_predict(fit_qlr(make_train(inputs, targets + 100.0), 0.7), query)

    assert scaled == pytest.approx(3.0 * base, rel=1e-7)
    assert shifted == pytest.approx(base + 100.0, rel=1e-9)


def test_quantiles_are_monotone_after_rearrangement(make_train):
    rng = np.random.default_rng(7)
    inputs = rng.normal(0.0, 1.0, (12, 3))
    qf = qlr_quantiles(make_train(inputs, rng.normal(0.0, 1.0, 12)), [3.0, -3.0, 2.0], build_quantile_grid())

    assert qf.is_monotone


def test_empty_training_set_is_rejected():
    with pytest.raises(StackException):
        fit_qlr(_intercept_only([]), 0.5)


def _noisy_train(seed: int, size: int, n: int) -> TrainingSet:
    rng = np.random.default_rng(seed)
    inputs = rng.normal(1000.0, 80.0, (size, n))
    targets = inputs.mean(axis=1) + rng.standard_t(4, size) * 20.0
    return TrainingSet(inputs, targets, np.arange(size))


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_path_reaches_the_cold_objective_at_every_alpha(seed):
    train = _noisy_train(seed, 400, 3)
    probabilities = build_quantile_grid().probabilities

    for coeffs in fit_qlr_path(train, probabilities):
        cold = fit_qlr(train, coeffs.alpha)
        assert pinball_objective(train, coeffs) == pytest.approx(pinball_objective(train, cold), rel=1e-8)


def test_distant_previous_fit_still_gives_the_optimum():
    train = _noisy_train(3, 500, 2)
    low = fit_qlr(train, 0.02)
    high = fit_qlr(train, 0.97, previous=low)

    assert pinball_objective(train, high) == pytest.approx(pinball_objective(train, fit_qlr(train, 0.97)), rel=1e-8)


def test_previous_fit_of_another_width_is_ignored():
    train = _noisy_train(4, 300, 2)
    other = CoefficientVector(0.0, [1.0, 0.0, 0.0], 0.5)

    assert pinball_objective(train, fit_qlr(train, 0.5, previous=other)) == \
        pytest.approx(pinball_objective(train, fit_qlr(train, 0.5)), rel=1e-8)
