"""Exceptions."""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['Error', 'InvalidRational', 'UnsortedBreakpoints',
           'ArityMismatch', 'DomainError', 'NotInDomain',
           'DivisionByZeroPolynomial', 'EvaluationUnavailable',
           'DegreeBoundExceeded', 'ParseError', 'ExpressionSyntaxError',
           'NonMonotoneConditions', 'DuplicateCondition']


class Error(RuntimeError):
    pass


class InvalidRational(Error, ValueError):

    def __init__(self, value, message=None, *args):
        super(InvalidRational, self).__init__(value, message, *args)
        self._message = message
        self._value = value

    def __str__(self):
        message = 'invalid rational {!r}'.format(self.value)
        if self.message:
            message += ': ' + self.message
        return message

    @property
    def message(self):
        return self._message

    @property
    def value(self):
        return self._value


class UnsortedBreakpoints(Error, ValueError):

    def __init__(self, points, index, *args):
        super(UnsortedBreakpoints, self).__init__(points, index, *args)
        self._index = index
        self._points = tuple(points)

    def __str__(self):
        return 'breakpoints are not strictly increasing at position {}:'\
                ' {} is not less than {}'\
                .format(self.index, self.points[self.index],
                        self.points[self.index + 1])

    @property
    def index(self):
        """The position *i* at which ``points[i] < points[i+1]`` fails."""
        return self._index

    @property
    def points(self):
        return self._points


class ArityMismatch(Error, ValueError):

    def __init__(self, nbreakpoints, nfuncs, *args):
        super(ArityMismatch, self).__init__(nbreakpoints, nfuncs, *args)
        self._nbreakpoints = nbreakpoints
        self._nfuncs = nfuncs

    def __str__(self):
        return '{} breakpoints require {} piece functions, got {}'\
                .format(self.nbreakpoints, 2 * self.nbreakpoints + 1,
                        self.nfuncs)

    @property
    def nbreakpoints(self):
        return self._nbreakpoints

    @property
    def nfuncs(self):
        return self._nfuncs


class DomainError(Error):

    def __init__(self, domain, function, message=None, *args):
        super(DomainError, self).__init__(domain, function, message, *args)
        self._domain = domain
        self._function = function
        self._message = message

    def __str__(self):
        message = 'cannot handle {} in the {} domain'\
                   .format(self.function, self.domain)
        if self.message:
            message += ': ' + self.message
        return message

    @property
    def domain(self):
        return self._domain

    @property
    def function(self):
        return self._function

    @property
    def message(self):
        return self._message


class NotInDomain(DomainError):
    pass


class DivisionByZeroPolynomial(DomainError, ZeroDivisionError):

    def __str__(self):
        return 'denominator of {} is the zero polynomial'\
                .format(self.function)


class EvaluationUnavailable(DomainError):

    def __init__(self, domain, function, point, *args):
        super(EvaluationUnavailable, self)\
         .__init__(domain, function, None, point, *args)
        self._point = point

    def __str__(self):
        return 'the {} domain cannot evaluate {} at {}'\
                .format(self.domain, self.function, self.point)

    @property
    def point(self):
        return self._point


class DegreeBoundExceeded(Error):

    def __init__(self, function, degree, bound, *args):
        super(DegreeBoundExceeded, self).__init__(function, degree, bound,
                                                  *args)
        self._bound = bound
        self._degree = degree
        self._function = function

    def __str__(self):
        return 'piece {} has degree {}, exceeding the bound {}'\
                .format(self.function, self.degree, self.bound)

    @property
    def bound(self):
        return self._bound

    @property
    def degree(self):
        return self._degree

    @property
    def function(self):
        return self._function


class ParseError(Error):

    def __init__(self, text, position, message=None, *args):
        super(ParseError, self).__init__(text, position, message, *args)
        self._message = message
        self._position = position
        self._text = text

    def __str__(self):
        message = '{} at position {}'.format(self._DESCRIPTION, self.position)
        if self.message:
            message += ': ' + self.message
        return message

    @property
    def message(self):
        return self._message

    @property
    def position(self):
        """The zero-based offset into :attr:`text`."""
        return self._position

    @property
    def text(self):
        return self._text

    _DESCRIPTION = 'cannot parse input'


class ExpressionSyntaxError(ParseError):

    _DESCRIPTION = 'syntax error'


class NonMonotoneConditions(ParseError):

    _DESCRIPTION = 'branch breakpoints are not strictly increasing'


class DuplicateCondition(ParseError):

    _DESCRIPTION = 'duplicate branch condition'
