"""Exception types shared across the package."""


class LynfacError(ValueError):
    """Base class for all argument/contract errors raised by lynfac."""


class EmptyWordError(LynfacError):
    """An operation defined only on nonempty words received the empty word."""


class AlphabetMismatchError(LynfacError):
    """Two words that must share an alphabet do not."""


class KindMismatchError(LynfacError):
    """A factorization of the wrong kind was supplied."""


class NotApplicableError(LynfacError):
    """The input fails a precondition under which the result is defined.

    Example: the LCP bound M is undefined when the word is an inverse
    Lyndon word (single-factor factorization).
    """


class InternalInvariantError(AssertionError):
    """A structural property the algorithms rely on was violated.

    This always indicates a bug in the library, never bad user input.
    """
