OKWHITE: str = '\033[00m'
OKBLUE: str = '\033[94m'
OKGREEN: str = '\033[92m'
WARNING: str = '\033[93m'
ERROR: str = '\033[91m'
BOLD: str = '\033[1m'


METHOD_QRS: str = "qrs"
METHOD_QLR: str = "qlr"
METHOD_QRF: str = "qrf"
METHODS: tuple = (METHOD_QRS, METHOD_QLR, METHOD_QRF)

MODE_GLOBAL: str = "global"
MODE_LOCAL: str = "local"
MODES: tuple = (MODE_GLOBAL, MODE_LOCAL)

GRID_HUNDREDTHS: tuple = tuple(range(1, 100))
PI_LOWER: float = 0.05
PI_UPPER: float = 0.95
PI_MISS_RATE: float = 0.1

DEFAULT_SEED: int = 42
DEFAULT_HOURS: int = 100
DEFAULT_HORIZON: int = 1
DEFAULT_JOBS: int = 1
DEFAULT_TREES: int = 100
DEFAULT_MIN_LEAF_QRS: int = 1
DEFAULT_MIN_LEAF_QRF: int = 10
DEFAULT_K_GRID: tuple = (20, 40, 60, 80, 100, 120, 140, 160, 180, 200, 250, 300)
DEFAULT_Q_GRID: tuple = (1, 5, 10, 15, 20, 30, 40, 50, 60)
DEFAULT_OUT_DIR: str = "./out"

DM_SIGNIFICANCE: float = 0.05
