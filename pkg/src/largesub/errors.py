"""Exception types shared across the library.

Everything raised on purpose derives from GroupError, so callers (and the
CLI) can distinguish domain failures from programming mistakes.
"""


class GroupError(Exception):
    pass


class NotAGroup(GroupError):
    """An axiom failed.  ``witness`` pins down where: a triple (a, b, c) for
    associativity, an element index for a missing inverse, a row/column pair
    for a Latin-square violation, None for a missing identity."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class OrderCapExceeded(GroupError):
    def __init__(self, order, cap):
        super().__init__(f"group order {order} exceeds the cap {cap}")
        self.order = order
        self.cap = cap


class UnknownName(GroupError):
    pass


class UnknownClass(GroupError):
    pass


class NotCentral(GroupError):
    pass


class NotIsomorphism(GroupError):
    pass


class NotNormal(GroupError):
    pass


class NotClosed(GroupError):
    pass


class NotAbelian(GroupError):
    pass


class NotSoluble(GroupError):
    pass


class TrivialGroup(GroupError):
    pass


class ClosureNotDeclared(GroupError):
    pass


class ClosureFlagsMissing(GroupError):
    pass


class BadBound(GroupError):
    pass


class BadClassBound(BadBound):
    pass


class HypothesisFailed(GroupError):
    def __init__(self, hypothesis, message=None):
        super().__init__(message or f"hypothesis failed: {hypothesis}")
        self.hypothesis = hypothesis


class NotAFittingClassWitness(GroupError):
    """Two normal members of a class whose join leaves the class: the class
    was flagged fitting_class but does not behave like one on this group."""

    def __init__(self, first, second, message=None):
        super().__init__(message or "join of two normal class members leaves the class")
        self.first = first
        self.second = second


class NotAFormationWitness(GroupError):
    """Two kernels whose intersection ruins the quotient membership: the
    class was flagged as quotient/subdirect closed but is not, empirically."""

    def __init__(self, first, second, message=None):
        super().__init__(message or "kernel intersection leaves the class")
        self.first = first
        self.second = second


class CorpusFormatError(GroupError):
    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no
