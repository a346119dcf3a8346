"""Exception hierarchy shared by every layer of the package."""


class QidError(Exception):
    """Base class for all errors raised by qid."""


class NonDivisible(QidError):
    """Exact division requested but the dividend is not a multiple of the divisor."""


class NegativeExponentAtZero(QidError):
    """Substituting zero into a variable that occurs with a negative exponent."""


class ZeroPolynomial(QidError):
    """Operation undefined on the zero polynomial (e.g. degree bounds)."""


class EvaluationDivisionByZero(QidError, ZeroDivisionError):
    """A variable carrying negative exponents was evaluated at zero."""


class ParseError(QidError, ValueError):
    pass


class ResidualDenominator(QidError):
    """A normalized term did not clear to a Laurent polynomial.

    Always a catalog bug: the normalizer attached to an identity is wrong.
    """


class ZeroDenominatorAtom(QidError):
    """A lower parameter produced a vanishing factor (1 - 1) before termination."""


class DomainError(QidError, ValueError):
    pass


class PlanInvalid(QidError, ValueError):
    pass
