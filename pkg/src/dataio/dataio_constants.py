COL_TIMESTAMP: str = "timestamp"
COL_ACTUAL: str = "actual"

FILE_METRICS: str = "metrics.csv"
FILE_POOLED: str = "pooled.csv"
FILE_REFR: str = "refr.csv"
FILE_SWEEPS: str = "sweeps.csv"
FILE_DM_TESTS: str = "dm_tests.csv"
FILE_DM_WINS: str = "dm_wins.csv"
FILE_HOURS: str = "hours.csv"
FILE_BASE_MODELS: str = "base_models.csv"
FILE_SUMMARY: str = "summary.json"

PANEL_SUFFIX: str = ".csv"
SYNTH_CONFIG_SUFFIX: str = ".synth.json"
