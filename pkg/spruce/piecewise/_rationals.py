"""Formal rational functions over the rationals."""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['RationalFunction', 'RationalFunctionDomain']

from . import _domains
from . import _exc
from . import _expr
from ._polynomials import Polynomial as _Polynomial


class RationalFunction(_expr.Expression):

    """A reduced quotient of rational polynomials.

    The numerator and denominator are coprime and the denominator is
    monic, so equal rational functions have equal representations.  The
    reduction cancels common factors, so a rational function built from
    ``(x^2 - 1)/(x - 1)`` is ``x + 1``: equivalence in this representation
    is equality off a finite set of points.

    :param numerator:
        The numerator.
    :type numerator: :class:`~spruce.piecewise.Polynomial`

    :param denominator:
        The denominator.
    :type denominator: :class:`~spruce.piecewise.Polynomial`

    :raise ZeroDivisionError: If *denominator* is zero.

    """

    __slots__ = ('_denominator', '_numerator')

    def __init__(self, numerator, denominator=_Polynomial((1,))):
        if not denominator:
            raise ZeroDivisionError('zero denominator')
        divisor = _Polynomial.gcd(numerator, denominator)
        numerator = numerator // divisor
        denominator = denominator // divisor
        lead = denominator.leading_coeff
        self._numerator = numerator.scale(1 / lead)
        self._denominator = denominator.monic()

    def __call__(self, point):
        """The value at *point*, or null at a pole."""
        denominator = self._denominator(point)
        if not denominator:
            return None
        return self._numerator(point) / denominator

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.args == other.args

    def __hash__(self):
        return hash(('RationalFunction', self.args))

    @property
    def args(self):
        return (self._numerator, self._denominator)

    @property
    def denominator(self):
        return self._denominator

    @property
    def numerator(self):
        return self._numerator

    def _format(self):
        if self._denominator.degree == 0:
            return self._numerator._format()
        return '{} / {}'.format(self._numerator
                                    ._format_operand(_expr._PRODUCT),
                                self._denominator
                                    ._format_operand(_expr._PRODUCT + 1))

    @property
    def _precedence(self):
        if self._denominator.degree == 0:
            return self._numerator._precedence
        return _expr._PRODUCT


class RationalFunctionDomain(_domains.EffectiveDomain):

    """The effective domain of formal rational functions.

    The canonical form of an expression is its reduced
    :class:`RationalFunction`, or :data:`~spruce.piecewise.UNDEF` for
    expressions involving the nowhere-defined function, which absorbs all
    arithmetic.  Evaluation is undefined at the zeros of the canonical
    denominator.

    Because reduction cancels common factors, the equivalence decided here
    identifies functions that differ only at removable singularities; it is
    equality off a finite set, which is weaker than pointwise extensional
    equivalence.

    """

    def _add(self, f, g):
        if _expr.UNDEF in (f, g):
            return _expr.UNDEF
        return RationalFunction(f.numerator * g.denominator
                                 + g.numerator * f.denominator,
                                f.denominator * g.denominator)

    def _canonicalize(self, f):
        if isinstance(f, RationalFunction):
            return f
        if isinstance(f, _expr.Undef):
            return _expr.UNDEF
        if isinstance(f, _Polynomial):
            return RationalFunction(f)
        try:
            convert = self._CONVERTERS[type(f)]
        except KeyError:
            raise _exc.NotInDomain(self, f,
                                   'not a rational function expression')
        return convert(self, f)

    def _constant(self, value):
        if not value.is_defined:
            return _expr.UNDEF
        return RationalFunction(_Polynomial.constant(value.rational))

    def _convert_const(self, f):
        return RationalFunction(_Polynomial.constant(f.value))

    def _convert_difference(self, f):
        return self._add(self._canonicalize(f.left),
                         self._neg(self._canonicalize(f.right)))

    def _convert_negation(self, f):
        return self._neg(self._canonicalize(f.operand))

    def _convert_power(self, f):
        base = self._canonicalize(f.base)
        if base is _expr.UNDEF:
            return base
        return RationalFunction(base.numerator ** f.exponent,
                                base.denominator ** f.exponent)

    def _convert_product(self, f):
        return self._mul(self._canonicalize(f.left),
                         self._canonicalize(f.right))

    def _convert_quotient(self, f):
        numerator = self._canonicalize(f.left)
        denominator = self._canonicalize(f.right)
        if _expr.UNDEF in (numerator, denominator):
            return _expr.UNDEF
        if not denominator.numerator:
            raise _exc.DivisionByZeroPolynomial(self, f)
        return RationalFunction(numerator.numerator * denominator.denominator,
                                numerator.denominator * denominator.numerator)

    def _convert_sum(self, f):
        return self._add(self._canonicalize(f.left),
                         self._canonicalize(f.right))

    def _convert_undef(self, f):
        return _expr.UNDEF

    def _convert_var(self, f):
        return RationalFunction(_Polynomial.variable())

    def _degree(self, f):
        if f is _expr.UNDEF:
            return 0
        return max(f.numerator.degree, f.denominator.degree)

    def _eval_at(self, f, point):
        if f is _expr.UNDEF:
            return _domains.UNDEFINED
        value = f(point)
        if value is None:
            return _domains.UNDEFINED
        return _domains.defined(value)

    def _mul(self, f, g):
        if _expr.UNDEF in (f, g):
            return _expr.UNDEF
        return RationalFunction(f.numerator * g.numerator,
                                f.denominator * g.denominator)

    def _neg(self, f):
        if f is _expr.UNDEF:
            return f
        return RationalFunction(-f.numerator, f.denominator)

    _CONVERTERS = {_expr.Const: _convert_const,
                   _expr.Difference: _convert_difference,
                   _expr.Negation: _convert_negation,
                   _expr.Power: _convert_power,
                   _expr.Product: _convert_product,
                   _expr.Quotient: _convert_quotient,
                   _expr.Sum: _convert_sum,
                   _expr.Undef: _convert_undef,
                   _expr.Var: _convert_var,
                   }

    _NAME = 'rational'

_domains.EffectiveDomain.register_impl('rational', RationalFunctionDomain)
