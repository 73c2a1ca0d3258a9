class QdeskError(Exception):
    """
    Base class of every contract violation raised by qdesk.
    The CLI maps `exit_code` straight onto the process exit status.
    """

    exit_code = 1


class InvalidInputError(QdeskError, ValueError):
    exit_code = 2


class CoefficientOverflowError(InvalidInputError):
    pass


class ToleranceError(QdeskError):
    exit_code = 1


class HeraldingError(QdeskError):
    exit_code = 3
