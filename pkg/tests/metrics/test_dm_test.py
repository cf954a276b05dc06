import numpy as np
import pytest
from scipy.stats import norm

from src.core.stack_exception import StackException
from src.metrics.dm_test import dm_test, dm_wins


def test_equal_losses():
    result = dm_test([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])

    assert result.statistic == 0.0
    assert result.p_value == 1.0
    assert dm_wins(result) == 0


def test_antisymmetry():
    rng = np.random.default_rng(0)
    a, b = rng.uniform(0, 5, 50), rng.uniform(0, 5, 50)

    assert dm_test(a, b).statistic == pytest.approx(-dm_test(b, a).statistic)
    assert dm_test(a, b).p_value == pytest.approx(dm_test(b, a).p_value)


def test_shifted_differential():
    d = np.random.default_rng(42).normal(0.5, 1.0, 100)
    result = dm_test(d, np.zeros(100))
    expected = d.mean() / np.sqrt(d.var(ddof=1) / 100)

    assert result.statistic == pytest.approx(expected)
    assert result.statistic == pytest.approx(5.0, abs=1.5)
    assert result.p_value == pytest.approx(2 * norm.sf(abs(expected)))
    assert result.p_value < 1e-6
    assert result.n_obs == 100


def test_lower_loss_wins():
    rng = np.random.default_rng(1)
    good = rng.uniform(0.0, 1.0, 100)
    bad = good + rng.uniform(0.5, 1.5, 100)

    assert dm_wins(dm_test(good, bad)) == 1
    assert dm_wins(dm_test(bad, good)) == -1


def test_constant_nonzero_differential_is_degenerate():
    with pytest.raises(StackException, match="degenerate loss differential"):
        dm_test([2.0, 3.0, 4.0], [1.0, 2.0, 3.0])


@pytest.mark.parametrize("a,b", [([1.0], [2.0]), ([1.0, 2.0], [1.0])])
def test_bad_lengths(a, b):
    with pytest.raises(StackException):
        dm_test(a, b)
