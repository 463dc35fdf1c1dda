"""The ordered breakpoint domain.

Breakpoints are exact rational numbers, represented by
:class:`fractions.Fraction` (or :class:`int`, which the fraction type
treats as a rational with denominator 1).  Both keep their values in lowest
terms with a positive denominator, so structural equality is mathematical
equality and deduplication of breakpoint sets is exact.

"""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['Ordering', 'as_breakpoint', 'compare', 'format_rational',
           'BreakpointSet', 'merge_breakpoints']

from bisect import bisect_left as _bisect_left
from enum import Enum as _Enum
from fractions import Fraction as _Fraction
import numbers as _numbers
import re as _re

from . import _exc


class Ordering(_Enum):

    """The outcome of a three-way comparison."""

    less = -1
    equal = 0
    greater = 1

    def __str__(self):
        return self.name.capitalize()


def as_breakpoint(obj):

    """Coerce *obj* to a breakpoint.

    :param obj:
        An :class:`int`, a :class:`~fractions.Fraction`, or a rational
        literal: an optional sign, an integer, and an optional ``/`` followed
        by a positive integer (for example ``-3/2`` or ``7``).  Decimals are
        not accepted.

    :rtype: :class:`~fractions.Fraction`

    :raise spruce.piecewise.InvalidRational:
        If *obj* is not an exact rational or a valid literal.

    """

    if isinstance(obj, _Fraction):
        return obj
    if isinstance(obj, _numbers.Rational) and not isinstance(obj, bool):
        return _Fraction(obj.numerator, obj.denominator)
    if isinstance(obj, str):
        match = _RATIONAL_LITERAL_RE.match(obj)
        if not match:
            raise _exc.InvalidRational(obj, 'expected a literal like -3/2 or 7')
        denominator = int(match.group('den') or 1)
        if denominator == 0:
            raise _exc.InvalidRational(obj, 'zero denominator')
        numerator = int(match.group('num'))
        if match.group('sign') == '-':
            numerator = -numerator
        return _Fraction(numerator, denominator)
    raise _exc.InvalidRational(obj, 'breakpoints must be exact rationals')


def compare(a, b, counts=None):

    """Compare two breakpoints.

    The comparison cross-multiplies by the (positive) denominators, so it is
    exact for arbitrarily large numerators and denominators.

    :param a:
        A breakpoint.
    :type a: :class:`~fractions.Fraction` or :class:`int`

    :param b:
        A breakpoint.
    :type b: :class:`~fractions.Fraction` or :class:`int`

    :param counts:
        If given, its ``comparisons`` tally is incremented.
    :type counts: :class:`~spruce.piecewise.OperationCounts` or null

    :rtype: :class:`Ordering`

    """

    if counts is not None:
        counts.comparisons += 1
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    if lhs < rhs:
        return Ordering.less
    elif lhs > rhs:
        return Ordering.greater
    else:
        return Ordering.equal


def format_rational(value):
    """Format a rational in the literal syntax accepted by
    :func:`as_breakpoint`."""
    value = as_breakpoint(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


class BreakpointSet(object):

    """A finite set of breakpoints in strictly increasing order.

    A :class:`!BreakpointSet` generates a range partition: its *n* points
    split the rationals into *n* + 1 open regions and the *n* points
    themselves.

    :param points:
        The breakpoints, in strictly increasing order.  Elements are
        coerced with :func:`as_breakpoint`.
    :type points: ~[:class:`~fractions.Fraction`]

    :raise spruce.piecewise.UnsortedBreakpoints:
        If *points* is not strictly increasing.

    .. seealso:: :meth:`from_iterable`

    """

    def __init__(self, points=()):
        points = tuple(as_breakpoint(point) for point in points)
        for i in range(len(points) - 1):
            if not points[i] < points[i + 1]:
                raise _exc.UnsortedBreakpoints(points, i)
        self._points = points

    def __contains__(self, point):
        try:
            point = as_breakpoint(point)
        except _exc.InvalidRational:
            return False
        i = _bisect_left(self._points, point)
        return i < len(self._points) and self._points[i] == point

    def __eq__(self, other):
        if not isinstance(other, BreakpointSet):
            return NotImplemented
        return self._points == other._points

    def __getitem__(self, index):
        if isinstance(index, slice):
            return self._from_sorted(self._points[index])
        return self._points[index]

    def __hash__(self):
        return hash((self.__class__, self._points))

    def __iter__(self):
        return iter(self._points)

    def __len__(self):
        return len(self._points)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __or__(self, other):
        if not isinstance(other, BreakpointSet):
            return NotImplemented
        return merge_breakpoints(self, other)

    def __repr__(self):
        return '{}([{}])'.format(self.__class__.__name__,
                                 ', '.join(repr(format_rational(point))
                                           for point in self._points))

    def __str__(self):
        return '{{{}}}'.format(', '.join(format_rational(point)
                                         for point in self._points))

    @classmethod
    def from_iterable(cls, points):
        """Make a breakpoint set from points in any order, dropping
        duplicates."""
        return cls._from_sorted(sorted(set(as_breakpoint(point)
                                           for point in points)))

    def index(self, point):
        """The position of *point* in this set.

        :raise ValueError: If *point* is not in this set.

        """
        point = as_breakpoint(point)
        i = _bisect_left(self._points, point)
        if i < len(self._points) and self._points[i] == point:
            return i
        raise ValueError('{} is not in {}'.format(format_rational(point),
                                                  self))

    @property
    def points(self):
        """The points, in increasing order.

        :type: (:class:`~fractions.Fraction`)

        """
        return self._points

    def union(self, *others):
        result = self
        for other in others:
            result = merge_breakpoints(result, other)
        return result

    @classmethod
    def _from_sorted(cls, points):
        breakpoints = cls.__new__(cls)
        breakpoints._points = tuple(points)
        return breakpoints


def merge_breakpoints(a, b, counts=None):

    """The union of two breakpoint sets, by linear merge.

    Each step performs one :func:`compare` and consumes at least one point,
    so the cost is linear in ``len(a) + len(b)``.

    :param a:
        A breakpoint set.
    :type a: :class:`BreakpointSet`

    :param b:
        A breakpoint set.
    :type b: :class:`BreakpointSet`

    :param counts:
        If given, tallies the comparisons performed.
    :type counts: :class:`~spruce.piecewise.OperationCounts` or null

    :rtype: :class:`BreakpointSet`

    """

    a = a.points if isinstance(a, BreakpointSet) else BreakpointSet(a).points
    b = b.points if isinstance(b, BreakpointSet) else BreakpointSet(b).points
    merged = []
    i = j = 0
    while i < len(a) and j < len(b):
        ordering = compare(a[i], b[j], counts=counts)
        if ordering is Ordering.less:
            merged.append(a[i])
            i += 1
        elif ordering is Ordering.greater:
            merged.append(b[j])
            j += 1
        else:
            merged.append(a[i])
            i += 1
            j += 1
    merged.extend(a[i:])
    merged.extend(b[j:])
    return BreakpointSet._from_sorted(merged)


_RATIONAL_LITERAL_RE = \
    _re.compile(r'^\s*(?P<sign>[+-]?)\s*(?P<num>\d+)(?:/(?P<den>\d+))?\s*$')
