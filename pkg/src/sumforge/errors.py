"""Exception hierarchy shared by every sumforge module.

Each error carries an ``exit_code`` used by the command-line front end:
2 for configuration mistakes, 3 for I/O problems, 4 for empty or
degenerate input.
"""


class SumforgeError(Exception):
    exit_code = 1


class ConfigError(SumforgeError, ValueError):
    exit_code = 2


class InputOutputError(SumforgeError, OSError):
    exit_code = 3


class DegenerateInput(SumforgeError, ValueError):
    exit_code = 4


# configuration / precondition violations
class InvalidParameter(ConfigError):
    pass


class InvalidOrder(ConfigError):
    pass


class OrderMismatch(ConfigError):
    pass


class SupportMismatch(ConfigError):
    pass


# I/O
class NotFound(InputOutputError, FileNotFoundError):
    pass


class NotUtf8(InputOutputError):
    pass


class NoTextFiles(InputOutputError):
    pass


# degenerate input
class EmptyFile(DegenerateInput):
    pass


class NoSentences(DegenerateInput):
    pass


class EmptyInput(DegenerateInput):
    pass


class EmptySentence(DegenerateInput):
    pass


class EmptyVector(DegenerateInput):
    pass


class EmptyVocabulary(DegenerateInput):
    pass


class EmptyReference(DegenerateInput):
    pass


class EmptyScores(DegenerateInput):
    pass


class NumericalFailure(SumforgeError, ArithmeticError):
    exit_code = 4
