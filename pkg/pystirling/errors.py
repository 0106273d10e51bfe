"""Exception hierarchy for pystirling."""


class PyStirlingError(Exception):
    """Base class for all pystirling errors."""


class IndexRangeError(PyStirlingError, IndexError):
    """An index or order lies outside the stored triangle."""


class ShapeError(PyStirlingError, ValueError):
    """Two triangles of different order were combined."""


class NotInvertibleError(PyStirlingError, ArithmeticError):
    """A triangle has a diagonal entry that is not a unit over the integers."""


class UnsupportedPairError(PyStirlingError, ValueError):
    """A pair or basis change is not in the registry an operation needs."""


class ConsistencyError(PyStirlingError, AssertionError):
    """An exact division or integrality check failed.

    This never signals bad input; it means a recurrence or conversion
    produced a value it should not have.
    """


class OracleLimitError(PyStirlingError, RuntimeError):
    """A brute-force enumeration was asked for a size above its bound."""

    def __init__(self, kind: str, n: int, limit: int):
        super().__init__(f"{kind}: n={n} exceeds enumeration bound {limit}")
        self.kind = kind
        self.n = n
        self.limit = limit


class BFileError(PyStirlingError, ValueError):
    """An OEIS b-file could not be parsed."""

    def __init__(self, message: str, line_number: int = 0):
        if line_number:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class ConfigError(PyStirlingError, ValueError):
    """A configuration value has the wrong type or range."""
