"""Univariate polynomials over the rationals."""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['Polynomial', 'PolynomialDomain']

from fractions import Fraction as _Fraction
import numbers as _numbers

from . import _domains
from . import _exc
from . import _expr
from . import _order


class Polynomial(_expr.Expression):

    """A univariate polynomial with exact rational coefficients.

    The representation is dense, lowest degree first, with no trailing zero
    coefficient; the zero polynomial has no coefficients.  Structural
    equality is therefore polynomial identity.

    Arithmetic with other polynomials and with rationals is exact and
    yields polynomials; arithmetic with any other expression builds an
    expression tree.

    :param coeffs:
        The coefficients, constant term first.
    :type coeffs: ~[:class:`~fractions.Fraction`]

    """

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs=()):
        coeffs = [_order.as_breakpoint(coeff) for coeff in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    def __add__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return super(Polynomial, self).__add__(other)
        other = coerced
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def __bool__(self):
        return bool(self._coeffs)

    def __call__(self, point):
        """The value at *point* (Horner's rule).

        :rtype: :class:`~fractions.Fraction`

        """
        point = _order.as_breakpoint(point)
        value = _Fraction(0)
        for coeff in reversed(self._coeffs):
            value = value * point + coeff
        return value

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError('polynomial division by zero')
        remainder = list(self._coeffs)
        quotient = [_Fraction(0)] * max(len(remainder) - len(other._coeffs)
                                        + 1, 0)
        lead = other._coeffs[-1]
        for shift in range(len(quotient) - 1, -1, -1):
            factor = remainder[shift + len(other._coeffs) - 1] / lead
            quotient[shift] = factor
            if factor:
                for i, coeff in enumerate(other._coeffs):
                    remainder[shift + i] -= factor * coeff
        return Polynomial(quotient), Polynomial(remainder)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __hash__(self):
        return hash(('Polynomial', self._coeffs))

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __mul__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return super(Polynomial, self).__mul__(other)
        other = coerced
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        product = [_Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    product[i + j] += x * y
        return Polynomial(product)

    def __neg__(self):
        return Polynomial(-coeff for coeff in self._coeffs)

    def __pow__(self, exponent):
        if isinstance(exponent, bool) \
               or not isinstance(exponent, _numbers.Integral) \
               or exponent < 0:
            return super(Polynomial, self).__pow__(exponent)
        result = Polynomial((1,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __radd__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return super(Polynomial, self).__radd__(other)
        other = coerced
        return other + self

    def __repr__(self):
        return '{}([{}])'.format(self.__class__.__name__,
                                 ', '.join(repr(_order.format_rational(coeff))
                                           for coeff in self._coeffs))

    def __rmul__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return super(Polynomial, self).__rmul__(other)
        other = coerced
        return other * self

    def __rsub__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return super(Polynomial, self).__rsub__(other)
        other = coerced
        return other - self

    def __sub__(self, other):
        coerced = self._coerce(other)
        if coerced is None:
            return super(Polynomial, self).__sub__(other)
        other = coerced
        return self + (-other)

    def __truediv__(self, other):
        if isinstance(other, _numbers.Rational) and not isinstance(other,
                                                                   bool):
            if not other:
                raise ZeroDivisionError('polynomial division by zero')
            return self.scale(_Fraction(1) / _order.as_breakpoint(other))
        return super(Polynomial, self).__truediv__(other)

    @property
    def args(self):
        return (self._coeffs,)

    @property
    def coeffs(self):
        """The coefficients, constant term first.

        :type: (:class:`~fractions.Fraction`)

        """
        return self._coeffs

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @property
    def degree(self):
        """The degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @classmethod
    def gcd(cls, a, b):
        """The monic greatest common divisor of *a* and *b*; zero if both
        are zero."""
        while b:
            a, b = b, a % b
        return a.monic() if a else a

    @property
    def leading_coeff(self):
        return self._coeffs[-1] if self._coeffs else _Fraction(0)

    def monic(self):
        if not self._coeffs:
            return self
        return self.scale(1 / self._coeffs[-1])

    def scale(self, factor):
        factor = _order.as_breakpoint(factor)
        return Polynomial(coeff * factor for coeff in self._coeffs)

    @classmethod
    def variable(cls):
        return cls((0, 1))

    @classmethod
    def _coerce(cls, obj):
        if isinstance(obj, Polynomial):
            return obj
        if isinstance(obj, _numbers.Rational) and not isinstance(obj, bool):
            return cls.constant(obj)
        return None

    def _format(self):
        if not self._coeffs:
            return '0'
        terms = []
        for degree in range(len(self._coeffs) - 1, -1, -1):
            coeff = self._coeffs[degree]
            if not coeff:
                continue
            magnitude = abs(coeff)
            if degree == 0:
                term = _order.format_rational(magnitude)
            else:
                monomial = 'x' if degree == 1 else 'x^{}'.format(degree)
                if magnitude == 1:
                    term = monomial
                else:
                    term = '{}*{}'.format(_order.format_rational(magnitude),
                                          monomial)
            if not terms:
                terms.append('-' + term if coeff < 0 else term)
            else:
                terms.append((' - ' if coeff < 0 else ' + ') + term)
        return ''.join(terms)

    @property
    def _precedence(self):
        nonzero = [(degree, coeff)
                   for degree, coeff in enumerate(self._coeffs) if coeff]
        if len(nonzero) > 1:
            return _expr._SUM
        if not nonzero:
            return _expr._ATOM
        degree, coeff = nonzero[0]
        if abs(coeff) != 1 and degree > 0:
            return _expr._PRODUCT
        if coeff < 0:
            return _expr._NEGATION
        if degree > 1:
            return _expr._POWER
        return _expr._ATOM


class PolynomialDomain(_domains.EffectiveDomain):

    """The strong effective domain of univariate rational polynomials.

    The canonical form of an expression is its expanded :class:`Polynomial`.
    Quotients are admitted when their denominator is a nonzero constant.

    """

    def _add(self, f, g):
        return f + g

    def _canonicalize(self, f):
        if isinstance(f, Polynomial):
            return f
        try:
            convert = self._CONVERTERS[type(f)]
        except KeyError:
            raise _exc.NotInDomain(self, f, 'not a polynomial expression')
        return convert(self, f)

    def _constant(self, value):
        if not value.is_defined:
            raise _exc.NotInDomain(self, value,
                                   'polynomials are defined everywhere')
        return Polynomial.constant(value.rational)

    def _convert_const(self, f):
        return Polynomial.constant(f.value)

    def _convert_difference(self, f):
        return self._canonicalize(f.left) - self._canonicalize(f.right)

    def _convert_negation(self, f):
        return -self._canonicalize(f.operand)

    def _convert_power(self, f):
        return self._canonicalize(f.base) ** f.exponent

    def _convert_product(self, f):
        return self._canonicalize(f.left) * self._canonicalize(f.right)

    def _convert_quotient(self, f):
        denominator = self._canonicalize(f.right)
        if not denominator:
            raise _exc.DivisionByZeroPolynomial(self, f)
        if denominator.degree > 0:
            raise _exc.NotInDomain(self, f,
                                   'the denominator {} is not constant'
                                    .format(denominator))
        return self._canonicalize(f.left) / denominator.leading_coeff

    def _convert_sum(self, f):
        return self._canonicalize(f.left) + self._canonicalize(f.right)

    def _convert_var(self, f):
        return Polynomial.variable()

    def _degree(self, f):
        return f.degree

    def _eval_at(self, f, point):
        return _domains.defined(f(point))

    def _mul(self, f, g):
        return f * g

    def _neg(self, f):
        return -f

    _CONVERTERS = {_expr.Const: _convert_const,
                   _expr.Difference: _convert_difference,
                   _expr.Negation: _convert_negation,
                   _expr.Power: _convert_power,
                   _expr.Product: _convert_product,
                   _expr.Quotient: _convert_quotient,
                   _expr.Sum: _convert_sum,
                   _expr.Var: _convert_var,
                   }

    _NAME = 'polynomial'

_domains.EffectiveDomain.register_impl('polynomial', PolynomialDomain)
