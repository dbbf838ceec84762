"""
Errors Module
Exception hierarchy shared by the engine, the CLI and the API
"""


class KnotMovesError(Exception):
    """Base error; carries the CLI exit code and the HTTP status"""

    exit_code = 1
    http_status = 500


class SpecSyntaxError(KnotMovesError):
    """Link specification does not match the grammar"""

    exit_code = 2
    http_status = 400

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class SpecRangeError(KnotMovesError):
    """Parsed specification violates an arity or range rule"""

    exit_code = 2
    http_status = 400


class UnknownLinkError(KnotMovesError):
    """Catalog key not found"""

    exit_code = 2
    http_status = 404


class CrossingLimitError(KnotMovesError):
    """Diagram is larger than the configured skein limit"""

    exit_code = 3
    http_status = 413

    def __init__(self, engine: str, crossings: int, limit: int):
        super().__init__(f"{engine}: {crossings} crossings exceed the limit of {limit}")
        self.crossings = crossings
        self.limit = limit


class InvalidSiteError(KnotMovesError):
    """Move site edges are missing or not on a common face"""

    exit_code = 2
    http_status = 400


class InvalidPointError(KnotMovesError):
    """Evaluation point (a0, x0) is not admissible"""

    exit_code = 2
    http_status = 400


class ConventionError(KnotMovesError):
    """An exactness assertion failed, which signals a convention bug"""

    exit_code = 1
    http_status = 500
