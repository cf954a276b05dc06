DB_FILE: str = "records.json"
DB_RUNS: str = "runs"
