from enum import IntEnum

from projflow._errors import ParseError
from projflow._errors import ProjflowError
from projflow._errors import UndecidedError


class ExitCode(IntEnum):
    PASS = 0
    FAIL = 1
    PARSE = 2
    PRECONDITION = 3
    UNDECIDED = 4


def exit_code_for(error: ProjflowError) -> ExitCode:
    if isinstance(error, ParseError):
        return ExitCode.PARSE
    if isinstance(error, UndecidedError):
        return ExitCode.UNDECIDED
    return ExitCode.PRECONDITION
