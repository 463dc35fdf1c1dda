"""Piecewise function test cases."""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['PiecewiseTestCase']

import unittest as _unittest

from .. import _canon
from .. import _domains
from .. import _operators
from .. import _oracle


class PiecewiseTestCase(_unittest.TestCase):

    """Piecewise function tests.

    Each test gets a fresh instance of the effective domain named by
    :attr:`DOMAIN`, so its operation counts start at zero.

    """

    def __init__(self, *args, **kwargs):
        super(PiecewiseTestCase, self).__init__(*args, **kwargs)
        self._domain = None

    def assertAgreesAt(self, p, q, points):
        """Assert that *p* and *q* have equal values at every point of
        *points*."""
        for point in points:
            p_value = _operators.evaluate(p, point, domain=self.domain)
            q_value = _operators.evaluate(q, point, domain=self.domain)
            if p_value != q_value:
                self.fail('{} and {} differ at {}: {} != {}'
                           .format(p, q, point, p_value, q_value))

    def assertAgreesOnSamples(self, p, q, degree_bound=4):
        """Assert that *p* and *q* agree at the sample points of the union
        of their breakpoints."""
        plan = _oracle.sample_points(p.breakpoints | q.breakpoints,
                                     degree_bound)
        self.assertAgreesAt(p, q, plan.points)

    def assertIdempotent(self, p):
        """Assert that the canonical form and the pseudo normal form of
        *p* are their own normal forms."""
        for normalize in (_canon.canonical_form, _canon.pseudonormalform):
            result = normalize(p, domain=self.domain)
            self.assertOperatorEqual(normalize(result, domain=self.domain),
                                     result)

    def assertOperatorEqual(self, p, q):
        """Assert that *p* and *q* are structurally equal."""
        if p != q:
            self.fail('{} != {}'.format(p, q))

    def assertWellFormed(self, p):
        """Assert that *p* has strictly increasing breakpoints and
        *2n+1* pieces."""
        self.assertIsInstance(p, _operators.PiecewiseOperator)
        points = p.breakpoints.points
        for a, b in zip(points, points[1:]):
            self.assertLess(a, b)
        self.assertEqual(len(p.pieces), 2 * len(points) + 1)

    @property
    def domain(self):
        return self._domain

    def setUp(self):
        self._domain = _domains.as_domain(self.DOMAIN)
        super(PiecewiseTestCase, self).setUp()

    DOMAIN = 'polynomial'
