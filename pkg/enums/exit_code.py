from enum import IntEnum


class ExitCode(IntEnum):
    """
    Process exit statuses of the command-line interface.

    A successful computation exits with ``SUCCESS`` whatever the mathematical
    verdict is, so pipelines can tell "ran and says NO" from "failed to run".

    Members:
        SUCCESS             : The command ran to completion.
        VERIFICATION_FAILED : A verification clause failed (``ninegon --verify``)
                              or an internal self-check did not hold.
        USAGE_ERROR         : Invalid command-line usage.
        INPUT_ERROR         : The input could not be parsed or validated.
    """

    SUCCESS = 0
    VERIFICATION_FAILED = 1
    USAGE_ERROR = 2
    INPUT_ERROR = 3
