"""Effective domains of piece functions."""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['Value', 'defined', 'UNDEFINED', 'EffectiveDomain', 'as_domain']

import abc as _abc
from collections import namedtuple as _namedtuple

from . import _exc
from . import _expr
from . import _order
from . import _stats


class Value(_namedtuple('Value', ('is_defined', 'rational'))):

    """The value of a piece function at a point.

    A value is either defined, carrying an exact rational, or undefined
    (``undef``, the value of a partial function outside its domain).  Two
    undefined values are equal; a defined value never equals an undefined
    one.  Arithmetic on values is exact, and undefinedness absorbs.

    .. seealso:: :func:`defined`, :data:`UNDEFINED`

    """

    __slots__ = ()

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __mul__(self, other):
        return self._combine(other, lambda a, b: a * b)

    def __neg__(self):
        return self if not self.is_defined else defined(-self.rational)

    def __repr__(self):
        if not self.is_defined:
            return 'UNDEFINED'
        return 'defined({!r})'.format(_order.format_rational(self.rational))

    def __str__(self):
        if not self.is_defined:
            return 'undef'
        return _order.format_rational(self.rational)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def _combine(self, other, op):
        if not isinstance(other, Value):
            return NotImplemented
        if not (self.is_defined and other.is_defined):
            return UNDEFINED
        return defined(op(self.rational, other.rational))


def defined(rational):
    """A defined :class:`Value`."""
    return Value(True, _order.as_breakpoint(rational))


UNDEFINED = Value(False, None)


class EffectiveDomain(object, metaclass=_abc.ABCMeta):

    """An effective domain of piece functions.

    An effective domain decides extensional equivalence of its functions.
    Every domain provided here is a *strong* effective domain: it carries a
    canonicalizer :meth:`canonicalize` such that two functions are
    equivalent if and only if their canonical forms are structurally equal,
    and it evaluates functions at breakpoints (:meth:`eval_at`), which is
    what the canonical form of piecewise operators requires.

    To obtain a domain by name, use :func:`as_domain` or
    :meth:`impl_class`.  To register a new implementation, use
    :meth:`register_impl`.

    These implementations are available by default:

    ============== ========================= ==================================
    Name           Class                     Functions
    ============== ========================= ==================================
    ``polynomial`` |PolynomialDomain|        univariate polynomials over the
                                             rationals
    ``rational``   |RationalFunctionDomain|  formal rational functions over the
                                             rationals, plus ``undef``
    ============== ========================= ==================================

    .. |PolynomialDomain| replace::
        :class:`~spruce.piecewise._polynomials.PolynomialDomain`

    .. |RationalFunctionDomain| replace::
        :class:`~spruce.piecewise._rationals.RationalFunctionDomain`

    Each instance tallies its canonicalizations and evaluations in
    :attr:`counts`.  The public methods validate and count; subclasses
    implement the underscored hooks, which receive and return canonical
    representatives.

    """

    def __init__(self):
        self._counts = _stats.OperationCounts()

    def __repr__(self):
        return '{}()'.format(self.__class__.__name__)

    def __str__(self):
        return self.name

    def add(self, f, g):
        """The canonical sum of *f* and *g*."""
        return self._add(self._canonical(f), self._canonical(g))

    def canonicalize(self, f):

        """The canonical representative of *f*.

        Calls are tallied in :attr:`counts`.

        :param f:
            A piece expression.
        :type f: :class:`~spruce.piecewise.Expression` or exact rational

        :raise spruce.piecewise.NotInDomain:
            If *f* does not denote a function of this domain.

        :raise spruce.piecewise.DivisionByZeroPolynomial:
            If a denominator of *f* is the zero polynomial.

        """

        self._counts.canonicalize_calls += 1
        return self._canonical(f)

    def constant(self, value):
        """The canonical constant function with the given :class:`Value`."""
        return self._constant(value)

    @property
    def counts(self):
        """This domain's operation tallies.

        :type: :class:`~spruce.piecewise.OperationCounts`

        """
        return self._counts

    def degree(self, f):
        """The degree of *f*."""
        return self._degree(self._canonical(f))

    def equiv(self, f, g):
        """Whether *f* and *g* are equivalent, by comparison of canonical
        forms."""
        return self._canonical(f) == self._canonical(g)

    def eval_at(self, f, point):

        """The value of *f* at *point*.

        Calls are tallied in :attr:`counts`.

        :param f:
            A piece expression.
        :type f: :class:`~spruce.piecewise.Expression` or exact rational

        :param point:
            A breakpoint.

        :rtype: :class:`Value`

        :raise spruce.piecewise.EvaluationUnavailable:
            If this domain does not evaluate functions at points.

        """

        self._counts.evaluations += 1
        point = _order.as_breakpoint(point)
        value = self._eval_at(self._canonical(f), point)
        if value is NotImplemented:
            raise _exc.EvaluationUnavailable(self, f, point)
        return value

    def format(self, f):
        """The canonical text of *f* in the expression syntax."""
        return str(self._canonical(f))

    @classmethod
    def impl_class(cls, name=None):
        if name is None:
            try:
                name = next(iter(cls._impls))
            except StopIteration:
                raise RuntimeError('cannot find any implementations of {}.{}'
                                    .format(cls.__module__, cls.__name__))
        try:
            return cls._impls[name]
        except KeyError:
            raise ValueError('unknown effective domain {!r}; expecting one'
                              ' of {}'
                              .format(name, ', '.join(cls.impl_names())))

    @classmethod
    def impl_names(cls):
        return tuple(cls._impls)

    def is_zero(self, f):
        return self.equiv(f, 0)

    def mul(self, f, g):
        """The canonical product of *f* and *g*."""
        return self._mul(self._canonical(f), self._canonical(g))

    @property
    def name(self):
        return self._NAME

    def neg(self, f):
        """The canonical negation of *f*."""
        return self._neg(self._canonical(f))

    def pow(self, f, exponent):
        """The canonical *exponent*-th power of *f*."""
        return self._canonical(_expr.Power(self._canonical(f), exponent))

    @classmethod
    def register_impl(cls, name, impl):
        """Register an effective domain implementation.

        :param str name:
            The implementation's name.

        :param impl:
            The implementation.
        :type impl: :class:`EffectiveDomain` subclass

        """
        cls._impls[name] = impl

    def sub(self, f, g):
        """The canonical difference of *f* and *g*."""
        return self._add(self._canonical(f),
                         self._neg(self._canonical(g)))

    @_abc.abstractmethod
    def _add(self, f, g):
        pass

    def _canonical(self, f):
        return self._canonicalize(_expr.as_expression(f))

    @_abc.abstractmethod
    def _canonicalize(self, f):
        pass

    @_abc.abstractmethod
    def _constant(self, value):
        pass

    @_abc.abstractmethod
    def _degree(self, f):
        pass

    def _eval_at(self, f, point):
        return NotImplemented

    @_abc.abstractmethod
    def _mul(self, f, g):
        pass

    @_abc.abstractmethod
    def _neg(self, f):
        pass

    _NAME = None

    _impls = {}


def as_domain(domain=None):

    """Resolve an effective domain.

    :param domain:
        An effective domain, the name of a registered implementation, or
        null for the first registered implementation (``polynomial``).
        Names yield a new instance with fresh :attr:`~EffectiveDomain.counts`.
    :type domain: :class:`EffectiveDomain` or :obj:`str` or null

    :rtype: :class:`EffectiveDomain`

    """

    if isinstance(domain, EffectiveDomain):
        return domain
    return EffectiveDomain.impl_class(domain)()
