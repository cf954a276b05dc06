from .config import create_config
from .ezio import print_success, prompt
from ..core.constants import OKWHITE, OKGREEN


"""
Run once after cloning to write config.json with the run
defaults (seed, test hours, forest sizes, sweep grids, output dir)
"""

if __name__ == "__main__":
    answer: str = prompt("\nSet up config.json interactively? (defaults are used otherwise) [y/N]: ")

    if create_config(answer.strip().lower() not in ("y", "yes")):
        print_success("\nSetup complete. Run {0} to start!".format(OKWHITE + "python3 main.py --help" + OKGREEN), True)
