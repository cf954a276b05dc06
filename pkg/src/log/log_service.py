import sys

from ..core.constants import WARNING, ERROR, OKWHITE
from ..core.dates import get_now

LOG_INFO: str = "[INFO]   "
LOG_WARNING: str = "[WARNING]"
LOG_ERROR: str = "[ERROR]  "


"""
Service solely designed to log run progress and errors to the
console (stderr) and, when a log path is configured, a text file
"""
class LogService:
    def __init__(self, log_path: str = None, do_print: bool = True):
        self.log_path: str = log_path
        self.do_print: bool = do_print


    def log_info(self, message: str, context: str) -> None:
        self._log(message, context, LOG_INFO)

    def log_warning(self, message: str, context: str) -> None:
        self._log(message, context, LOG_WARNING)

    def log_error(self, message, context: str) -> None:
        self._log(str(message), context, LOG_ERROR)

    # print the coloured line and
    # append to the log file if there is one
    def _log(self, message: str, context: str, msg_type: str) -> None:
        message = self.format_message(message, context, msg_type)

        if self.do_print:
            if msg_type == LOG_WARNING:
                print(WARNING + message + OKWHITE, file=sys.stderr)
            elif msg_type == LOG_ERROR:
                print(ERROR + message + OKWHITE, file=sys.stderr)
            else:
                print(OKWHITE + message, file=sys.stderr)

        if self.log_path:
            with open(self.log_path, "a+") as f:
                f.write("{0}\n".format(get_now()))
                f.write("{0}\n\n".format(message))


    @staticmethod
    def format_message(txt: str, context: str, msg_type: str) -> str:
        return "{2} {0}: {1}".format(context, txt, msg_type)
