"""Exception hierarchy shared by every layer of the package."""


class StableModError(Exception):
    """Base class for all errors raised by stablemod."""


class InputError(StableModError):
    """Malformed or inconsistent user input (CLI exit code 2)."""


class DimensionMismatch(InputError):
    pass


class InvalidQuiver(InputError):
    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(f"{kind}: {msg}" for kind, msg in self.errors))


class QuiverMismatch(InputError):
    pass


class InvalidMorphism(InputError):
    pass


class NotEpi(InputError):
    pass


class NotMono(InputError):
    pass


class NotAn(InputError):
    """The operation needs an A_n quiver and got something else."""


class UnknownSuite(InputError):
    pass


class NotAbelianCase(StableModError):
    pass


class NoneExists(StableModError):
    pass


class IsActuallyEpi(StableModError):
    pass


class InternalAssertion(StableModError):
    """A derived mathematical claim failed; signals a bug (CLI exit code 3)."""


class OracleMismatch(InternalAssertion):
    pass


class SplitAssertionFailed(InternalAssertion):
    pass
