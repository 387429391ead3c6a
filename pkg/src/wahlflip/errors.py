"""Exception hierarchy shared by all modules.

Every error raised on bad input derives from :class:`ChainError`, which is a
``ValueError``; the CLI maps these to exit status 2.  :class:`ChainOverflow`
maps to exit status 3 and :class:`DisagreementWithFormula` to exit status 1.
"""


class ChainError(ValueError):
    """Base class for invalid input to the chain calculus."""


class NotCoprime(ChainError):
    pass


class OutOfRange(ChainError):
    pass


class InvalidChain(ChainError):
    pass


class ParseError(ChainError):
    pass


class NotMinusOne(ChainError):
    pass


class IndexOutOfRange(ChainError, IndexError):
    pass


class NotClassW(ChainError):
    pass


class UnderlineNotLast(ChainError):
    pass


class AllTwos(ChainError):
    pass


class NoMinusOne(ChainError):
    pass


class MultipleMinusOnes(ChainError):
    pass


class ChainOverflow(OverflowError):
    """A continuant left the supported signed 64-bit range."""


class DisagreementWithFormula(RuntimeError):
    """The blow-down oracle and the closed-form flip disagree.

    This is never caused by user input; it means a bug in one of the two routes.
    """
