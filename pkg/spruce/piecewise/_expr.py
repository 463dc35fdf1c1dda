"""Piece expressions.

Piece functions are written as immutable expression trees over rational
constants, the variable :data:`X`, sums, differences, products, quotients,
negations and non-negative integer powers.  The trees are purely
structural: two trees are equal when they have the same shape, node types
and constants, whatever functions they denote.  Deciding whether two trees
denote the same function is the job of an
:class:`~spruce.piecewise.EffectiveDomain`.

Python arithmetic operators build trees::

    >>> (X + 1) ** 2
    Power(Sum(Var(), Const(1)), 2)
    >>> (X + 1) ** 2 == X ** 2 + 2 * X + 1
    False
    >>> print((X + 1) ** 2)
    (x + 1)^2

"""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['Expression', 'Const', 'Var', 'X', 'Undef', 'UNDEF', 'Negation',
           'Sum', 'Difference', 'Product', 'Quotient', 'Power',
           'as_expression', 'walk']

from fractions import Fraction as _Fraction
import numbers as _numbers

from . import _order


# precedences, loosest first
_SUM, _PRODUCT, _NEGATION, _POWER, _ATOM = range(1, 6)


class Expression(object):

    """An expression tree node."""

    __slots__ = ()

    def __add__(self, other):
        return _binary(Sum, self, other)

    def __eq__(self, other):
        if other is self:
            return True
        if type(other) is not type(self):
            return NotImplemented
        return self.args == other.args

    def __hash__(self):
        return hash((type(self).__name__, self.args))

    def __mul__(self, other):
        return _binary(Product, self, other)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __neg__(self):
        return Negation(self)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        return Power(self, exponent)

    def __radd__(self, other):
        return _binary(Sum, other, self)

    def __repr__(self):
        return '{}({})'.format(self.__class__.__name__,
                               ', '.join(repr(arg) for arg in self.args))

    def __rmul__(self, other):
        return _binary(Product, other, self)

    def __rsub__(self, other):
        return _binary(Difference, other, self)

    def __rtruediv__(self, other):
        return _binary(Quotient, other, self)

    def __str__(self):
        return self._format()

    def __sub__(self, other):
        return _binary(Difference, self, other)

    def __truediv__(self, other):
        return _binary(Quotient, self, other)

    @property
    def args(self):
        """The node's constructor arguments.

        :type: :obj:`tuple`

        """
        raise NotImplementedError()

    @property
    def children(self):
        """The node's subexpressions.

        :type: (:class:`Expression`)

        """
        return ()

    def _format(self):
        raise NotImplementedError()

    def _format_operand(self, min_precedence):
        text = self._format()
        if self._precedence < min_precedence:
            text = '(' + text + ')'
        return text

    _precedence = _ATOM


class Const(Expression):

    """A rational constant."""

    __slots__ = ('_value',)

    def __init__(self, value):
        self._value = _order.as_breakpoint(value)

    def __repr__(self):
        if self._value.denominator == 1:
            return 'Const({})'.format(self._value.numerator)
        return 'Const(Fraction({}, {}))'.format(self._value.numerator,
                                                self._value.denominator)

    @property
    def args(self):
        return (self._value,)

    @property
    def value(self):
        return self._value

    def _format(self):
        return _order.format_rational(self._value)

    @property
    def _precedence(self):
        return _NEGATION if self._value < 0 else _ATOM


class Var(Expression):

    """The variable ``x``."""

    __slots__ = ()

    @property
    def args(self):
        return ()

    def _format(self):
        return 'x'


X = Var()


class Undef(Expression):

    """The nowhere-defined function, written ``undef``."""

    __slots__ = ()

    @property
    def args(self):
        return ()

    def _format(self):
        return 'undef'


UNDEF = Undef()


class Negation(Expression):

    __slots__ = ('_operand',)

    def __init__(self, operand):
        self._operand = as_expression(operand)

    @property
    def args(self):
        return (self._operand,)

    @property
    def children(self):
        return (self._operand,)

    @property
    def operand(self):
        return self._operand

    def _format(self):
        return '-' + self._operand._format_operand(_NEGATION)

    _precedence = _NEGATION


class _BinaryExpression(Expression):

    __slots__ = ('_left', '_right')

    def __init__(self, left, right):
        self._left = as_expression(left)
        self._right = as_expression(right)

    @property
    def args(self):
        return (self._left, self._right)

    @property
    def children(self):
        return (self._left, self._right)

    @property
    def left(self):
        return self._left

    @property
    def right(self):
        return self._right

    def _format(self):
        return '{}{}{}'.format(self._left._format_operand(self._precedence),
                               self._SYMBOL,
                               self._right
                                   ._format_operand(self._precedence + 1))

    _SYMBOL = None


class Sum(_BinaryExpression):
    __slots__ = ()
    _precedence = _SUM
    _SYMBOL = ' + '


class Difference(_BinaryExpression):
    __slots__ = ()
    _precedence = _SUM
    _SYMBOL = ' - '


class Product(_BinaryExpression):
    __slots__ = ()
    _precedence = _PRODUCT
    _SYMBOL = '*'


class Quotient(_BinaryExpression):
    __slots__ = ()
    _precedence = _PRODUCT
    _SYMBOL = ' / '


class Power(Expression):

    """A non-negative integer power."""

    __slots__ = ('_base', '_exponent')

    def __init__(self, base, exponent):
        if isinstance(exponent, bool) \
               or not isinstance(exponent, _numbers.Integral) \
               or exponent < 0:
            raise ValueError('invalid exponent {!r}; expected a non-negative'
                              ' integer'
                              .format(exponent))
        self._base = as_expression(base)
        self._exponent = int(exponent)

    @property
    def args(self):
        return (self._base, self._exponent)

    @property
    def base(self):
        return self._base

    @property
    def children(self):
        return (self._base,)

    @property
    def exponent(self):
        return self._exponent

    def _format(self):
        return '{}^{}'.format(self._base._format_operand(_ATOM),
                              self._exponent)

    _precedence = _POWER


def as_expression(obj):

    """Coerce *obj* to an :class:`Expression`.

    Expressions are returned as they are; exact rationals become
    :class:`Const` nodes.

    :raise TypeError: If *obj* is neither.

    """

    if isinstance(obj, Expression):
        return obj
    if isinstance(obj, (_numbers.Rational, _Fraction)) \
           and not isinstance(obj, bool):
        return Const(obj)
    raise TypeError('cannot use {!r} as a piece expression'.format(obj))


def walk(expr):
    """Iterate over *expr* and all its subexpressions, parents first."""
    stack = [expr]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def _binary(cls, left, right):
    try:
        return cls(left, right)
    except TypeError:
        return NotImplemented
