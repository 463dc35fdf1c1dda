"""Random test operators.

All generators draw from a caller-supplied :class:`random.Random`, so a
seeded generator reproduces its operators exactly.

"""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['random_breakpoint_set', 'random_polynomial',
           'equivalent_expression', 'random_test_operator',
           'random_refinement', 'reshuffled_operator', 'equivalent_operator',
           'mutated_operator', 'random_probes']

from fractions import Fraction as _Fraction

from .. import _expr
from .. import _operators
from .. import _order
from .._domains import as_domain as _as_domain
from .._polynomials import Polynomial as _Polynomial


def equivalent_expression(rng, poly, depth=2):

    """A random expression equivalent to the polynomial *poly*.

    The expression is built in one of several shapes chosen at random: a
    randomly associated sum of its terms in random order, with some
    coefficients split in two; a Horner step ``x*q + c``; or a difference
    ``(poly + r) - r`` for a random polynomial *r*.  The subexpressions are
    reshuffled recursively up to *depth* levels.

    :param rng:
        A random number generator.
    :type rng: :class:`random.Random`

    :param poly:
        A polynomial.
    :type poly: :class:`~spruce.piecewise.Polynomial`

    :rtype: :class:`~spruce.piecewise.Expression`

    """

    shapes = ['terms']
    if depth > 0:
        shapes.append('difference')
        if poly.degree >= 1:
            shapes.append('horner')
    shape = rng.choice(shapes)

    if shape == 'horner':
        constant = _expr.Const(poly.coeffs[0])
        product = _expr.Product(_expr.X,
                                equivalent_expression(rng,
                                                      _Polynomial(poly
                                                                  .coeffs[1:]),
                                                      depth - 1))
        if rng.random() < 0.5:
            return _expr.Sum(product, constant)
        return _expr.Sum(constant, product)

    if shape == 'difference':
        other = random_polynomial(rng, degree=2)
        return _expr.Difference(equivalent_expression(rng, poly + other,
                                                      depth - 1),
                                equivalent_expression(rng, other,
                                                      depth - 1))

    terms = []
    for degree, coeff in enumerate(poly.coeffs):
        if not coeff:
            continue
        if rng.random() < 0.25:
            part = rng.randint(-9, 9)
            coeffs = (part, coeff - part)
        else:
            coeffs = (coeff,)
        for term_coeff in coeffs:
            if degree == 0:
                terms.append(_expr.Const(term_coeff))
            elif degree == 1 and term_coeff == 1:
                terms.append(_expr.X)
            else:
                terms.append(_expr.Product(term_coeff,
                                           _expr.Power(_expr.X, degree)))
    if not terms:
        return _expr.Const(0)
    rng.shuffle(terms)
    while len(terms) > 1:
        i = rng.randrange(len(terms) - 1)
        terms[i:i + 2] = [_expr.Sum(terms[i], terms[i + 1])]
    return terms[0]


def equivalent_operator(rng, p, max_new_breakpoints=4):
    """An operator equivalent to *p*: a random exact refinement of *p* with
    every piece replaced by a random equivalent expression."""
    return reshuffled_operator(rng, random_refinement(rng, p,
                                                      max_new_breakpoints))


def mutated_operator(rng, p):

    """An operator that differs from *p* in exactly one piece.

    The chosen piece has a nonzero constant added to it, so the mutation
    changes the value of the piecewise function on the whole
    range-partition element of that piece.

    :rtype: :class:`~spruce.piecewise.PiecewiseOperator`

    """

    pieces = list(p.pieces)
    i = rng.randrange(len(pieces))
    pieces[i] = _expr.Sum(pieces[i], rng.choice((-2, -1, 1, 2)))
    return _operators.make(p.breakpoints, pieces)


def random_breakpoint_set(rng, max_count=8, bound=20, max_denominator=4):
    """A random breakpoint set of at most *max_count* rationals with
    numerators in ``[-bound, bound]``."""
    count = rng.randint(0, max_count)
    return _order.BreakpointSet.from_iterable(
        _Fraction(rng.randint(-bound, bound), rng.randint(1, max_denominator))
        for _ in range(count))


def random_polynomial(rng, degree=4, coeff_bound=9):
    """A random polynomial of degree at most *degree* with integer
    coefficients in ``[-coeff_bound, coeff_bound]``."""
    return _Polynomial(rng.randint(-coeff_bound, coeff_bound)
                       for _ in range(rng.randint(0, degree) + 1))


def random_probes(rng, p, count):
    """*count* random points around the breakpoints of *p*, about a quarter
    of them breakpoints."""
    points = p.breakpoints.points
    probes = []
    for _ in range(count):
        if points and rng.random() < 0.25:
            probes.append(rng.choice(points))
        else:
            probes.append(_Fraction(rng.randint(-100, 100),
                                    rng.randint(1, 8)))
    return probes


def random_refinement(rng, p, max_new_breakpoints=4):
    """A random exact refinement of *p*."""
    return _operators.refine(p, random_breakpoint_set(rng,
                                                      max_new_breakpoints))


def random_test_operator(rng, max_breakpoints=8, degree=4, coeff_bound=9,
                         repeat_probability=0.3):

    """A random flat operator with canonical polynomial pieces.

    Neighboring pieces are often repeated, and point pieces are often
    polynomials that agree with the region on their left at the breakpoint
    without being equal to it, so that both normal forms have merges to do.

    :param rng:
        A random number generator.
    :type rng: :class:`random.Random`

    :param int max_breakpoints:
        The maximum number of breakpoints.

    :param int degree:
        The maximum degree of the pieces.

    :rtype: :class:`~spruce.piecewise.PiecewiseOperator`

    """

    breakpoints = random_breakpoint_set(rng, max_breakpoints)
    pairs = []
    left_fn = random_polynomial(rng, degree, coeff_bound)
    for point in breakpoints:
        choice = rng.random()
        if choice < repeat_probability:
            pt_fn = left_fn
        elif choice < 2 * repeat_probability and degree >= 1:
            # agrees with left_fn at point
            vanishing = _Polynomial((-point, 1)) \
                         * random_polynomial(rng, degree - 1, coeff_bound)
            pt_fn = left_fn + vanishing
        else:
            pt_fn = random_polynomial(rng, degree, coeff_bound)
        pairs.append(_operators.CondPair(left_fn, pt_fn, point))
        if rng.random() >= repeat_probability:
            left_fn = random_polynomial(rng, degree, coeff_bound)
    return _operators.PiecewiseOperator(pairs, left_fn)


def reshuffled_operator(rng, p, domain='polynomial'):
    """*p* with every piece replaced by a random equivalent expression of
    its canonical polynomial."""
    domain = _as_domain(domain)
    return _operators.lift_unary(
        lambda piece: equivalent_expression(rng, domain.canonicalize(piece)),
        p)
