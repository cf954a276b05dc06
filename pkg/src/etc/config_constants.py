"""
Known/expected config properties and 
file paths to align with the config.json
"""
DEFAULT_CONFIG_PATH: str = "./config.json"
KEY_SEED: str = "seed"
KEY_HOURS: str = "hours"
KEY_HORIZON: str = "horizon"
KEY_JOBS: str = "jobs"
KEY_TREES: str = "trees"
KEY_MIN_LEAF_QRS: str = "min_leaf_qrs"
KEY_MIN_LEAF_QRF: str = "min_leaf_qrf"
KEY_K_GRID: str = "k_grid"
KEY_Q_GRID: str = "q_grid"
KEY_OUT_DIR: str = "out_dir"
KEY_LOG_PATH: str = "log_path"
