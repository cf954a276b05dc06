import pytest

from src.core.stack_exception import StackException
from src.evaluation.hour_selection import select_test_hours


def test_full_year_panel(make_panel):
    hours = select_test_hours(make_panel(length=8760), 100)

    assert len(hours) == 100
    assert len(set(hours)) == 100
    assert hours[0] == 4380
    assert hours[-1] == 8759
    assert hours == sorted(hours)


def test_two_hours_are_the_endpoints(make_panel):
    assert select_test_hours(make_panel(length=100), 2) == [50, 99]


def test_single_hour_is_the_start(make_panel):
    assert select_test_hours(make_panel(length=100), 1) == [50]


def test_only_the_final_year_counts(make_panel):
    panel = make_panel(length=48, start="2017-12-31 00:00")
    # final year starts at position 24, its latter half at 36
    assert select_test_hours(panel, 2) == [36, 47]


def test_short_panels_are_rejected(make_panel):
    with pytest.raises(StackException, match="panel too short"):
        select_test_hours(make_panel(length=10), 6)

    with pytest.raises(StackException, match="panel too short"):
        select_test_hours(make_panel(length=40, start="2017-12-31 12:00"), 20)


def test_count_must_be_positive(make_panel):
    with pytest.raises(StackException):
        select_test_hours(make_panel(length=10), 0)
