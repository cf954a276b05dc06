"""
Wrapper for an exception to be thrown
for cleaner bad input and failed fit code
"""
class StackException(Exception):
    def __init__(self, message: str):
        super().__init__(message)
        self.raw_message: str = message
        self.message: str = "(!) {0} (!)".format(message)


"""
Parse failure while reading a panel file - carries
the 1-based line number of the offending row
"""
class PanelException(StackException):
    def __init__(self, message: str, line: int = None):
        if line is not None:
            message = "line {0}: {1}".format(line, message)

        super().__init__(message)
        self.line: int = line
