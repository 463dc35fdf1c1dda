"""Piecewise operators.

A piecewise operator over *n* breakpoints
:math:`\\lambda_1 < \\cdots < \\lambda_n` assigns a piece function to each
of the *2n+1* elements of the range partition they generate: the open
region left of each breakpoint, each breakpoint itself, and the open
region right of the last breakpoint.  It is stored as *n* condition pairs
and an end piece, which enforces the *2n+1* shape::

    pw { x < 0 : -x ; x = 0 : 0 ; otherwise : x }

    PiecewiseOperator([CondPair(-X, 0, 0)], EndPiece(X))

The operator *selects* a piece with its argument (:func:`chi`) and the
piecewise *function* then applies the selected piece to the same argument
(:func:`evaluate`).  Operators never evaluate their pieces on their own:
refinement (:func:`refine`) and lifting (:func:`lift_unary`,
:func:`lift_binary`) are purely structural.

"""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['CondPair', 'EndPiece', 'RegionKind', 'Region',
           'PiecewiseOperator', 'make', 'chi', 'evaluate', 'refine',
           'is_refinement', 'is_strict_refinement', 'lift_unary',
           'lift_binary', 'add', 'sub', 'mul', 'neg', 'power']

from collections import namedtuple as _namedtuple
from enum import Enum as _Enum

from . import _domains
from . import _exc
from . import _expr
from . import _order


class CondPair(_namedtuple('CondPair', ('left_fn', 'pt_fn', 'right_pt'))):

    """The pieces up to and including one breakpoint.

    :param left_fn:
        The piece on the open region left of *right_pt*.

    :param pt_fn:
        The piece at *right_pt*.

    :param right_pt:
        The breakpoint.

    """

    __slots__ = ()

    def __new__(cls, left_fn, pt_fn, right_pt):
        return super(CondPair, cls).__new__(cls,
                                            _expr.as_expression(left_fn),
                                            _expr.as_expression(pt_fn),
                                            _order.as_breakpoint(right_pt))

    def __repr__(self):
        return '{}({!r}, {!r}, {!r})'\
                .format(self.__class__.__name__, self.left_fn, self.pt_fn,
                        _order.format_rational(self.right_pt))


class EndPiece(_namedtuple('EndPiece', ('fn',))):

    """The piece on the open region right of the last breakpoint."""

    __slots__ = ()

    def __new__(cls, fn):
        return super(EndPiece, cls).__new__(cls, _expr.as_expression(fn))

    def __repr__(self):
        return '{}({!r})'.format(self.__class__.__name__, self.fn)


class RegionKind(_Enum):
    open = 'open'
    breakpoint = 'breakpoint'


class Region(_namedtuple('Region', ('kind', 'index'))):

    """An element of a range partition.

    ``Region.open_region(i)`` is the *i*-th open region, counting from zero
    at the unbounded left region; ``Region.at_breakpoint(i)`` is the *i*-th
    breakpoint.

    """

    __slots__ = ()

    def __str__(self):
        if self.is_open:
            return 'OpenRegion({})'.format(self.index)
        return 'AtBreakpoint({})'.format(self.index)

    @classmethod
    def at_breakpoint(cls, index):
        return cls(RegionKind.breakpoint, index)

    @property
    def is_breakpoint(self):
        return self.kind is RegionKind.breakpoint

    @property
    def is_open(self):
        return self.kind is RegionKind.open

    @classmethod
    def open_region(cls, index):
        return cls(RegionKind.open, index)


class PiecewiseOperator(_expr.Expression):

    """A piecewise operator.

    Piecewise operators are expressions, so they can be combined with
    arithmetic operators and nested inside the pieces of other operators;
    :func:`~spruce.piecewise.denest` flattens such combinations and
    :func:`~spruce.piecewise.canonical_form` normalizes them.

    :param pairs:
        The condition pairs, in strictly increasing order of breakpoint.
    :type pairs: ~[:class:`CondPair` or :obj:`tuple`]

    :param end:
        The end piece.
    :type end: :class:`EndPiece` or piece expression

    :raise spruce.piecewise.UnsortedBreakpoints:
        If the breakpoints of *pairs* are not strictly increasing.

    """

    __slots__ = ('_end', '_pairs')

    def __init__(self, pairs=(), end=0):
        pairs = tuple(pair if isinstance(pair, CondPair) else CondPair(*pair)
                      for pair in pairs)
        for i in range(len(pairs) - 1):
            if not pairs[i].right_pt < pairs[i + 1].right_pt:
                raise _exc.UnsortedBreakpoints((pair.right_pt
                                                for pair in pairs),
                                               i)
        self._pairs = pairs
        self._end = end if isinstance(end, EndPiece) else EndPiece(end)

    def __repr__(self):
        return '{}([{}], {!r})'.format(self.__class__.__name__,
                                       ', '.join(repr(pair)
                                                 for pair in self._pairs),
                                       self._end)

    @property
    def args(self):
        return (self._pairs, self._end)

    @property
    def breakpoints(self):
        """The breakpoints.

        :type: :class:`~spruce.piecewise.BreakpointSet`

        """
        return _order.BreakpointSet._from_sorted(pair.right_pt
                                                 for pair in self._pairs)

    @property
    def children(self):
        return self.pieces

    @property
    def end(self):
        """
        :type: :class:`EndPiece`
        """
        return self._end

    @property
    def nbreakpoints(self):
        return len(self._pairs)

    @property
    def pairs(self):
        """
        :type: (:class:`CondPair`)
        """
        return self._pairs

    def piece_at(self, region):
        """The piece on the given range-partition element.

        :param region:
            A range-partition element of this operator.
        :type region: :class:`Region`

        """
        if region.is_breakpoint:
            return self._pairs[region.index].pt_fn
        if region.index < len(self._pairs):
            return self._pairs[region.index].left_fn
        if region.index == len(self._pairs):
            return self._end.fn
        raise IndexError('no open region {} in an operator with {}'
                          ' breakpoints'
                          .format(region.index, len(self._pairs)))

    @property
    def pieces(self):
        """The *2n+1* pieces in order.

        :type: (:class:`~spruce.piecewise.Expression`)

        """
        pieces = []
        for pair in self._pairs:
            pieces.append(pair.left_fn)
            pieces.append(pair.pt_fn)
        pieces.append(self._end.fn)
        return tuple(pieces)

    def _format(self):
        if not self._pairs:
            return self._end.fn._format()
        branches = []
        for pair in self._pairs:
            point = _order.format_rational(pair.right_pt)
            branches.append('x < {} : {}'.format(point, pair.left_fn))
            branches.append('x = {} : {}'.format(point, pair.pt_fn))
        branches.append('otherwise : {}'.format(self._end.fn))
        return 'pw {{ {} }}'.format(' ; '.join(branches))

    @property
    def _precedence(self):
        if not self._pairs:
            return self._end.fn._precedence
        return _expr._ATOM


def make(breakpoints, funcs):

    """Make a piecewise operator from its breakpoints and pieces.

    :param breakpoints:
        *n* breakpoints in strictly increasing order.
    :type breakpoints:
        :class:`~spruce.piecewise.BreakpointSet` or ~[exact rational]

    :param funcs:
        The *2n+1* pieces in order: the region left of the first breakpoint,
        the first breakpoint, the next region, and so on.
    :type funcs: ~[piece expression]

    :rtype: :class:`PiecewiseOperator`

    :raise spruce.piecewise.ArityMismatch:
        If there are not exactly *2n+1* pieces.

    :raise spruce.piecewise.UnsortedBreakpoints:
        If the breakpoints are not strictly increasing.

    """

    if not isinstance(breakpoints, _order.BreakpointSet):
        breakpoints = _order.BreakpointSet(breakpoints)
    funcs = tuple(funcs)
    if len(funcs) != 2 * len(breakpoints) + 1:
        raise _exc.ArityMismatch(len(breakpoints), len(funcs))
    return PiecewiseOperator((CondPair(funcs[2 * i], funcs[2 * i + 1], point)
                              for i, point in enumerate(breakpoints)),
                             funcs[-1])


def chi(p, point, counts=None):

    """Locate *point* in the range partition of *p*.

    This is a binary search over the breakpoints using three-way
    comparisons, so it performs at most
    :math:`\\lfloor\\log_2 n\\rfloor + 1 \\le \\lceil\\log_2(2n+1)\\rceil + 1`
    comparisons.

    :param p:
        A piecewise operator.
    :type p: :class:`PiecewiseOperator`

    :param point:
        A breakpoint.

    :param counts:
        If given, tallies the comparisons performed.
    :type counts: :class:`~spruce.piecewise.OperationCounts` or null

    :rtype: :class:`Region`

    """

    point = _order.as_breakpoint(point)
    pairs = p.pairs
    lo, hi = 0, len(pairs)
    while lo < hi:
        mid = (lo + hi) // 2
        ordering = _order.compare(point, pairs[mid].right_pt, counts=counts)
        if ordering is _order.Ordering.equal:
            return Region.at_breakpoint(mid)
        elif ordering is _order.Ordering.less:
            hi = mid
        else:
            lo = mid + 1
    return Region.open_region(lo)


def evaluate(p, point, domain=None):

    """The value of the piecewise function of *p* at *point*.

    The point is used twice: once to select the piece (:func:`chi`) and
    once as the argument of the selected piece.  A piece that is itself a
    piecewise operator is evaluated the same way.

    :param p:
        A piecewise operator.
    :type p: :class:`PiecewiseOperator`

    :param point:
        A breakpoint.

    :param domain:
        The effective domain of the pieces.
    :type domain:
        :class:`~spruce.piecewise.EffectiveDomain` or :obj:`str` or null

    :rtype: :class:`~spruce.piecewise.Value`

    """

    domain = _domains.as_domain(domain)
    point = _order.as_breakpoint(point)
    piece = p.piece_at(chi(p, point))
    if isinstance(piece, PiecewiseOperator):
        return evaluate(piece, point, domain=domain)
    return domain.eval_at(piece, point)


def refine(p, points, counts=None):

    """The exact refinement of *p* by *points*.

    The result has the breakpoints ``points | p.breakpoints``.  A new
    breakpoint inside an open region of *p* splits that region, and the
    region's piece is copied to both halves and to the new breakpoint.
    Pieces are copied, never evaluated, so the result selects the very same
    piece as *p* at every point.  The cost is linear in the size of the
    union.

    :param p:
        A piecewise operator.
    :type p: :class:`PiecewiseOperator`

    :param points:
        The breakpoints to add.
    :type points:
        :class:`~spruce.piecewise.BreakpointSet` or ~[exact rational]

    :param counts:
        If given, tallies the comparisons performed by the merge.
    :type counts: :class:`~spruce.piecewise.OperationCounts` or null

    :rtype: :class:`PiecewiseOperator`

    """

    union = _order.merge_breakpoints(points, p.breakpoints, counts=counts)
    if len(union) == p.nbreakpoints:
        return p

    pairs = []
    old_pairs = p.pairs
    i = 0
    for point in union:
        if i < len(old_pairs) and old_pairs[i].right_pt == point:
            pairs.append(old_pairs[i])
            i += 1
        else:
            region_fn = old_pairs[i].left_fn if i < len(old_pairs) \
                                             else p.end.fn
            pairs.append(CondPair(region_fn, region_fn, point))
    return PiecewiseOperator(pairs, p.end)


def is_refinement(p, q):

    """Whether *q* is a refinement of *p*.

    *q* refines *p* if every breakpoint of *p* is a breakpoint of *q* and
    *q* selects structurally the same piece as *p* on every element of its
    range partition.

    """

    old_pairs = p.pairs
    i = 0
    for pair in q.pairs:
        region_fn = old_pairs[i].left_fn if i < len(old_pairs) else p.end.fn
        if pair.left_fn != region_fn:
            return False
        if i < len(old_pairs) and old_pairs[i].right_pt == pair.right_pt:
            if pair.pt_fn != old_pairs[i].pt_fn:
                return False
            i += 1
        elif pair.pt_fn != region_fn:
            return False
    return i == len(old_pairs) and q.end.fn == p.end.fn


def is_strict_refinement(p, q):
    return is_refinement(p, q) and q.nbreakpoints > p.nbreakpoints


def lift_unary(psi, p):

    """Lift a unary function on pieces to piecewise operators.

    :param psi:
        A function of one piece.
    :type psi: (piece expression) -> piece expression

    :param p:
        A piecewise operator.
    :type p: :class:`PiecewiseOperator`

    :return:
        The operator with the breakpoints of *p* whose every piece *g* is
        replaced by ``psi(g)``.
    :rtype: :class:`PiecewiseOperator`

    """

    return PiecewiseOperator((CondPair(psi(pair.left_fn), psi(pair.pt_fn),
                                       pair.right_pt)
                              for pair in p.pairs),
                             psi(p.end.fn))


def lift_binary(psi, p1, p2, counts=None):

    """Lift a binary function on pieces to piecewise operators.

    Both operands are refined to the union of their breakpoints, and *psi*
    is applied to corresponding pieces.  The cost is linear in the number
    of breakpoints of the union.

    :param psi:
        A function of two pieces.
    :type psi: (piece expression, piece expression) -> piece expression

    :param p1:
        A piecewise operator.
    :type p1: :class:`PiecewiseOperator`

    :param p2:
        A piecewise operator.
    :type p2: :class:`PiecewiseOperator`

    :param counts:
        If given, tallies the comparisons performed by the merge.
    :type counts: :class:`~spruce.piecewise.OperationCounts` or null

    :rtype: :class:`PiecewiseOperator`

    """

    union = _order.merge_breakpoints(p1.breakpoints, p2.breakpoints,
                                     counts=counts)
    q1 = refine(p1, union)
    q2 = refine(p2, union)
    return PiecewiseOperator((CondPair(psi(a.left_fn, b.left_fn),
                                       psi(a.pt_fn, b.pt_fn),
                                       a.right_pt)
                              for a, b in zip(q1.pairs, q2.pairs)),
                             psi(q1.end.fn, q2.end.fn))


def add(p, q, domain=None):
    """The lifted canonical sum of *p* and *q*."""
    return lift_binary(_domains.as_domain(domain).add, p, q)


def mul(p, q, domain=None):
    """The lifted canonical product of *p* and *q*."""
    return lift_binary(_domains.as_domain(domain).mul, p, q)


def neg(p, domain=None):
    """The lifted canonical negation of *p*."""
    return lift_unary(_domains.as_domain(domain).neg, p)


def power(p, exponent, domain=None):
    """The lifted canonical *exponent*-th power of *p*."""
    domain = _domains.as_domain(domain)
    return lift_unary(lambda f: domain.pow(f, exponent), p)


def sub(p, q, domain=None):
    """The lifted canonical difference of *p* and *q*."""
    return lift_binary(_domains.as_domain(domain).sub, p, q)
