"""Exception hierarchy shared by every module."""


class OrthoposetError(Exception):
    pass


class CycleDetected(OrthoposetError):
    pass


class DuplicateLabel(OrthoposetError):
    pass


class UnknownLabel(OrthoposetError):
    pass


class SizeExceeded(OrthoposetError):
    pass


class EmptySubset(OrthoposetError):
    pass


class NotAPartialOrder(OrthoposetError):
    pass


class NotBounded(OrthoposetError):
    pass


class NotAnOrthoposet(OrthoposetError):
    def __init__(self, report):
        self.report = report
        bad = ", ".join(v.axiom for v in report.failures())
        super().__init__(f"not an orthoposet (failed: {bad})")


class NotOrthogonal(OrthoposetError):
    pass


class NotOrthomodular(OrthoposetError):
    pass


class NotComparable(OrthoposetError):
    pass


class NotCentral(OrthoposetError):
    pass


class NotClosedUnderInvolution(OrthoposetError):
    pass


class NotSublattice(OrthoposetError):
    pass


class IdentityViolation(OrthoposetError):
    pass


class EmbeddingCheckFailed(OrthoposetError):
    pass


class InternalInconsistency(OrthoposetError):
    """Two routes that must agree did not. Always a bug, never bad input."""


class BadDivisor(OrthoposetError):
    pass


class BadPartition(OrthoposetError):
    pass


class BadParameters(OrthoposetError):
    pass


class UnknownFixture(OrthoposetError):
    pass


class ParseError(OrthoposetError):
    def __init__(self, message, line=None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
