from typing import Callable
from ..core.constants import BOLD, OKGREEN, OKBLUE, WARNING, ERROR, OKWHITE


def print_info(msg: str) -> None:
    print(OKBLUE + msg + OKWHITE)


def print_success(msg: str, bold: bool = False) -> None:
    print((BOLD if bold else "") + OKGREEN + msg + OKWHITE)


def print_warning(msg: str) -> None:
    print(WARNING + msg + OKWHITE)


def print_fail(msg: str) -> None:
    print(ERROR + msg + OKWHITE)


def prompt(msg: str, read: Callable[[str], str] = input) -> str:
    return read(OKBLUE + msg + OKWHITE)


# ask until the answer parses, an empty
# answer keeps the default
def prompt_value(msg: str, default, parse: Callable, read: Callable[[str], str] = input):
    while True:
        answer: str = prompt("{0} (default {1}): ".format(msg, default), read).strip()

        if answer == "":
            return default

        try:
            return parse(answer)
        except ValueError:
            print_fail("'{0}' is not valid here, try again".format(answer))
