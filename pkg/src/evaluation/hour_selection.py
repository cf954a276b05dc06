from typing import List

from ..core.forecast_panel import ForecastPanel
from ..core.stack_exception import StackException


"""
Evenly spaced test hours over the latter half of the panel's
final calendar year, both ends included
"""
def select_test_hours(panel: ForecastPanel, count: int) -> List[int]:
    if count < 1:
        raise StackException("Test hour count must be at least 1")
    if panel.length < 2 * count:
        raise StackException("panel too short: {0} hours for {1} test hours".format(panel.length, count))

    year_start: int = panel.final_year_start
    end: int = panel.length - 1
    start: int = year_start + (end - year_start + 1) // 2

    if count == 1:
        return [start]

    if (end - start) // (count - 1) < 1:
        raise StackException("panel too short: {0} test hours do not fit between hours {1} and {2}"
            .format(count, start, end))

    return [start + (i * (end - start)) // (count - 1) for i in range(count)]
