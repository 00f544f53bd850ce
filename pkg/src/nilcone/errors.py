"""Exception hierarchy shared by every module."""


class NilconeError(Exception):
    """Base class; the CLI maps these to exit status 1."""


class UsageError(NilconeError, ValueError):
    pass


class IndexOutOfRange(NilconeError, ValueError):
    pass


class JacobiViolation(NilconeError):
    def __init__(self, i, j, k, residual):
        self.triple = (i, j, k)
        self.residual = tuple(residual)
        res = ", ".join(str(x) for x in self.residual)
        super().__init__(f"Jacobi identity fails on (e{i}, e{j}, e{k}); residual ({res})")


class NotNice(NilconeError):
    pass


class ZeroBracket(NilconeError):
    pass


class NonCoordinateCenter(NilconeError):
    pass


class InfeasibleInput(NilconeError):
    pass


class EmptyCone(NilconeError):
    pass


class Unbounded(NilconeError):
    pass


class TooManyVars(NilconeError):
    pass


class UnknownId(NilconeError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown id"


class BadParameter(NilconeError, ValueError):
    pass
