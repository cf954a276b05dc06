import datetime, pytz
import pandas as pd

UTC: str = "UTC"
ISO_FORMAT: str = "%Y-%m-%dT%H:%M:%SZ"
LOG_FORMATTED: str = "{0:%Y-%m-%d %H:%M:%S} UTC"
ONE_HOUR: pd.Timedelta = pd.Timedelta(hours=1)


"""
Get the current timestamp 
"""
def get_now(format_date: bool = True):
    now = datetime.datetime.now(tz=pytz.timezone(UTC))

    if format_date:
        return LOG_FORMATTED.format(now)

    return now


"""
Hourly UTC index starting at the given instant
"""
def hourly_range(start: str, periods: int) -> pd.DatetimeIndex:
    return pd.date_range(start=pd.Timestamp(start, tz=pytz.utc), periods=periods, freq="h")


def to_iso(stamps: pd.DatetimeIndex) -> list:
    return [s.strftime(ISO_FORMAT) for s in stamps.tz_convert(pytz.utc)]


def is_hourly(stamps: pd.DatetimeIndex) -> bool:
    if len(stamps) < 2:
        return True

    return bool((stamps[1:] - stamps[:-1] == ONE_HOUR).all())


# first position of the calendar year that
# holds the last timestamp of the index
def final_year_start(stamps: pd.DatetimeIndex) -> int:
    last: pd.Timestamp = stamps[-1].tz_convert(pytz.utc)
    year_start = pd.Timestamp(year=last.year, month=1, day=1, tz=pytz.utc)
    return int(stamps.searchsorted(year_start, side="left"))
