"""Definitional denesting.

A piecewise operator may occupy a piece position of another operator, and
operators may be combined with arithmetic.  :func:`denest` flattens such
an expression into a single operator by intersecting regions::

    pw { x < 3 : pw { x < 1 : x^2 - 3 ; x = 1 : -5
                      ; otherwise : x^3 - 7*x^2 + 16*x - 12 }
         ; x = 3 : 3
         ; otherwise : pw { x < 0 : -x ; x = 0 : 0 ; otherwise : x } }

becomes an operator with the breakpoints 1 and 3: the inner breakpoint 0
lies outside the region ``x > 3`` that hosts the absolute value, so it is
dropped.

Denesting is structural: pieces are selected and combined as expressions
but never canonicalized or evaluated.

"""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['denest', 'is_nested', 'is_flat']

from bisect import bisect_left as _bisect_left, bisect_right as _bisect_right
import logging as _logging

from . import _expr
from . import _operators


def denest(expr):

    """Flatten a piecewise expression into a single piecewise operator.

    * A plain piece expression becomes a one-piece operator.

    * An operator whose pieces contain no operators is returned as it is.

    * An operator nested in an open region :math:`(a, b)` of its host keeps
      only its breakpoints strictly inside :math:`(a, b)`; its pieces are
      restricted to the intersections of its regions with :math:`(a, b)`.

    * An operator nested at a breakpoint :math:`\\lambda` of its host
      collapses to its piece selected at :math:`\\lambda`.

    * Arithmetic nodes are resolved by lifting the node over the denested
      operands with :func:`~spruce.piecewise.lift_unary` and
      :func:`~spruce.piecewise.lift_binary`.

    The total number of breakpoints never exceeds the sum of the breakpoint
    counts of all the operators in *expr*.

    :param expr:
        A piecewise expression.
    :type expr: :class:`~spruce.piecewise.Expression` or exact rational

    :rtype: :class:`~spruce.piecewise.PiecewiseOperator`

    """

    expr = _expr.as_expression(expr)
    if not is_nested(expr):
        if isinstance(expr, _operators.PiecewiseOperator):
            return expr
        return _operators.PiecewiseOperator((), expr)

    result = _denest(expr)
    if _logger.isEnabledFor(_logging.DEBUG):
        _logger.debug('denested an expression with {} nested operators into'
                       ' an operator with {} breakpoints'
                       .format(sum(1 for node in _expr.walk(expr)
                                   if isinstance(node,
                                                 _operators.PiecewiseOperator)),
                               result.nbreakpoints))
    return result


def is_flat(p):
    """Whether *p* is a piecewise operator none of whose pieces contains a
    piecewise operator."""
    return isinstance(p, _operators.PiecewiseOperator) and not is_nested(p)


def is_nested(expr):
    """Whether a piecewise operator occurs strictly below the root of
    *expr*."""
    nodes = _expr.walk(expr)
    next(nodes)
    return any(isinstance(node, _operators.PiecewiseOperator)
               for node in nodes)


def _denest(expr):
    if isinstance(expr, _operators.PiecewiseOperator):
        return _denest_operator(expr)

    try:
        build = _BUILDERS[type(expr)]
    except KeyError:
        return _operators.PiecewiseOperator((), expr)
    return build(expr)


def _denest_binary(cls):
    def build(expr):
        return _operators.lift_binary(cls, denest(expr.left),
                                      denest(expr.right))
    return build


def _denest_negation(expr):
    return _operators.lift_unary(_expr.Negation, denest(expr.operand))


def _denest_operator(p):
    pairs = []
    lower = None
    for pair in p.pairs:
        region = denest(pair.left_fn)
        inner_pairs, tail_fn = _restrict(region, lower, pair.right_pt)
        pairs.extend(inner_pairs)

        point_op = denest(pair.pt_fn)
        point_fn = point_op.piece_at(_operators.chi(point_op,
                                                    pair.right_pt))
        pairs.append(_operators.CondPair(tail_fn, point_fn, pair.right_pt))
        lower = pair.right_pt

    end = denest(p.end.fn)
    inner_pairs, end_fn = _restrict(end, lower, None)
    pairs.extend(inner_pairs)
    return _operators.PiecewiseOperator(pairs, end_fn)


def _denest_power(expr):
    exponent = expr.exponent
    return _operators.lift_unary(lambda base: _expr.Power(base, exponent),
                                 denest(expr.base))


def _restrict(p, lower, upper):
    """The pairs of flat operator *p* strictly inside the open interval
    (*lower*, *upper*), and the piece of *p* on the last subregion.

    Null bounds are infinite.

    """
    points = p.breakpoints.points
    start = 0 if lower is None else _bisect_right(points, lower)
    stop = len(points) if upper is None else _bisect_left(points, upper)
    if stop < len(points):
        tail_fn = p.pairs[stop].left_fn
    else:
        tail_fn = p.end.fn
    return p.pairs[start:stop], tail_fn


_BUILDERS = {_expr.Difference: _denest_binary(_expr.Difference),
             _expr.Negation: _denest_negation,
             _expr.Power: _denest_power,
             _expr.Product: _denest_binary(_expr.Product),
             _expr.Quotient: _denest_binary(_expr.Quotient),
             _expr.Sum: _denest_binary(_expr.Sum),
             }

_logger = _logging.getLogger(__name__)
