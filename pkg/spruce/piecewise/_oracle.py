"""An evaluation-based extensional equivalence oracle.

The oracle decides whether two piecewise functions agree everywhere by
evaluating them on a finite set of probe points, without trusting any
canonicalizer.  For polynomial pieces of degree at most *d*, agreement at
*d+1* distinct points of an open region forces the pieces to be identical
on that region, so probing every breakpoint and *d+1* points of every
region decides equivalence exactly.  For rational functions the oracle
can only find counterexamples.

"""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['SamplePlan', 'sample_points', 'extensional_equiv_oracle']

from collections import namedtuple as _namedtuple
from fractions import Fraction as _Fraction

from . import _domains
from . import _exc
from . import _nesting
from . import _operators
from . import _order


class SamplePlan(_namedtuple('SamplePlan', ('points', 'per_region_count'))):

    """Probe points for a range partition.

    :param points:
        The probe points.
    :type points: :class:`~spruce.piecewise.BreakpointSet`

    :param int per_region_count:
        The number of evenly spaced probes in each open region.

    """

    __slots__ = ()


def extensional_equiv_oracle(p, q, degree_bound, domain=None):

    """Whether the piecewise functions of *p* and *q* agree everywhere.

    Both are evaluated at every point of
    ``sample_points(p.breakpoints | q.breakpoints, degree_bound)``;
    undefined values agree only with undefined values.

    :param p:
        A piecewise expression.
    :type p: :class:`~spruce.piecewise.PiecewiseOperator`

    :param q:
        A piecewise expression.
    :type q: :class:`~spruce.piecewise.PiecewiseOperator`

    :param int degree_bound:
        An upper bound on the degrees of all pieces.

    :param domain:
        The effective domain of the pieces.
    :type domain:
        :class:`~spruce.piecewise.EffectiveDomain` or :obj:`str` or null

    :rtype: :obj:`bool`

    :raise spruce.piecewise.DegreeBoundExceeded:
        If a piece has a degree greater than *degree_bound*.

    """

    domain = _domains.as_domain(domain)
    p = _nesting.denest(p)
    q = _nesting.denest(q)
    for piece in p.pieces + q.pieces:
        degree = domain.degree(piece)
        if degree > degree_bound:
            raise _exc.DegreeBoundExceeded(piece, degree, degree_bound)

    plan = sample_points(p.breakpoints | q.breakpoints, degree_bound)
    return all(_operators.evaluate(p, point, domain=domain)
                == _operators.evaluate(q, point, domain=domain)
               for point in plan.points)


def sample_points(breakpoints, degree_bound):

    """Probe points for the range partition of *breakpoints*.

    The plan contains

    * every breakpoint,

    * in each bounded open region :math:`(a, b)`, the *degree_bound* + 1
      points :math:`a + (b - a) j / (d + 2)` for :math:`1 \\le j \\le d + 1`
      and the midpoint :math:`(a + b) / 2`,

    * the points at distances :math:`1, \\ldots, d + 1` before the first
      breakpoint and after the last one.

    With no breakpoints, the plan is :math:`0, 1, \\ldots, d`.

    :param breakpoints:
        A breakpoint set.
    :type breakpoints: :class:`~spruce.piecewise.BreakpointSet`

    :param int degree_bound:
        A non-negative degree bound *d*.

    :rtype: :class:`SamplePlan`

    :raise ValueError: If *degree_bound* is negative.

    """

    if degree_bound < 0:
        raise ValueError('invalid degree bound {!r}; expected a non-negative'
                          ' integer'
                          .format(degree_bound))
    count = degree_bound + 1
    if not isinstance(breakpoints, _order.BreakpointSet):
        breakpoints = _order.BreakpointSet(breakpoints)
    points = breakpoints.points
    if not points:
        return SamplePlan(_order.BreakpointSet(range(count)), count)

    probes = list(points)
    for a, b in zip(points, points[1:]):
        width = b - a
        probes.extend(a + width * _Fraction(j, count + 1)
                      for j in range(1, count + 1))
        probes.append((a + b) / 2)
    probes.extend(points[0] - k for k in range(1, count + 1))
    probes.extend(points[-1] + k for k in range(1, count + 1))
    return SamplePlan(_order.BreakpointSet.from_iterable(probes), count)
