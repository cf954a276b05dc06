import sys

from src.cli.cli import run


"""
Primary entry file: synthesize panels, evaluate the
meta-learners, sweep k/q and compare methods

@license MIT
"""


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
