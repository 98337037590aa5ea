import re


class DicksonError(Exception):
    """Base class of every error raised by the library"""

    def __init__(self, msg):
        super(DicksonError, self).__init__(msg)


class FieldMismatchError(DicksonError):
    """Operands live over different primes or different numbers of variables"""

    def __init__(self, msg):
        super(FieldMismatchError, self).__init__(msg)


class SingularMatrixError(DicksonError):
    """Matrix is not invertible over F_p"""

    def __init__(self, msg):
        super(SingularMatrixError, self).__init__(msg)


class InexactDivisionError(DicksonError):
    """Divisor does not divide the dividend"""

    def __init__(self, msg):
        super(InexactDivisionError, self).__init__(msg)


class IndexRangeError(DicksonError):
    """Generator indices outside their admissible range"""

    def __init__(self, msg):
        super(IndexRangeError, self).__init__(msg)


class UnsupportedError(DicksonError):
    """Requested prime, family or group tag is not supported"""

    def __init__(self, msg):
        super(UnsupportedError, self).__init__(msg)


class ExpressionError(DicksonError):
    """Expression text could not be parsed

    The character offset of the failure is kept on ``offset``.
    """

    def __init__(self, msg, offset=0):
        super(ExpressionError, self).__init__("{} (at offset {})".format(msg, offset))
        self.offset = offset


class IdentityError(DicksonError):
    """Two constructions of the same element disagree"""

    def __init__(self, msg, residual=None):
        super(IdentityError, self).__init__(msg)
        self.residual = residual


class NotInvariantError(DicksonError):
    """Element is not invariant under the group it was handed to"""

    def __init__(self, msg):
        super(NotInvariantError, self).__init__(msg)


class RewriteLimitError(DicksonError):
    """Rewriting did not reach a normal form within the step cap"""

    def __init__(self, msg):
        super(RewriteLimitError, self).__init__(msg)


def parse_int_list(text):
    """Parse a comma separated list of integers

    >>> parse_int_list("1, 2,3")
    [1, 2, 3]

    >>> parse_int_list("")
    []
    """
    if not text or not text.strip():
        return []
    return [int(v) for v in re.split(r"\s*,\s*", text.strip())]


def parse_composition(text, n):
    """Parse a composition such as ``1,2`` and check that it sums to n

    >>> parse_composition("1,2", 3)
    (1, 2)
    """
    parts = tuple(parse_int_list(text))
    if not parts or any(v < 1 for v in parts) or sum(parts) != n:
        raise IndexRangeError(
            "Composition {} is not a composition of {}".format(text, n)
        )
    return parts


def q_number(p, k):
    """Return 1 + p + ... + p^(k-1)

    >>> q_number(3, 3)
    13

    >>> q_number(2, 0)
    0
    """
    return (p ** k - 1) // (p - 1)
