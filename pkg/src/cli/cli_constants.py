PROG: str = "stackcast"
CONTEXT: str = "cli"

CMD_SYNTH: str = "synth"
CMD_EVALUATE: str = "evaluate"
CMD_SWEEP: str = "sweep"
CMD_COMPARE: str = "compare"

AXIS_K: str = "k"
AXIS_Q: str = "q"
AXES: tuple = (AXIS_K, AXIS_Q)

EXIT_OK: int = 0
EXIT_FAILED: int = 1
EXIT_USAGE: int = 2

DEFAULT_SYNTH_SERIES: int = 10
DEFAULT_SYNTH_DAYS: int = 730
DEFAULT_SYNTH_MODELS: int = 8
