"""Normal forms of piecewise operators.

Both forms canonicalize every piece once and then merge neighboring pairs
in a single left-to-right pass.  They differ in the merge test:

* :func:`pseudonormalform` merges a pair into its right neighbor when the
  pair's region piece, the pair's point piece and the neighbor's region
  piece are structurally equal.  The result is extensionally equivalent to
  the input, but extensionally equal operators may have different pseudo
  normal forms: ``pw { x < 0 : 0 ; x = 0 : x^2 ; otherwise : 0 }`` is its
  own pseudo normal form although it is zero everywhere.

* :func:`canonical_form` denests its input and merges a pair into its
  right neighbor when the two region pieces are structurally equal and the
  pair's point piece has the same value at the breakpoint as the region
  pieces.  The result is canonical: two piecewise expressions are
  extensionally equivalent if and only if their canonical forms are
  structurally equal.

* :func:`normal_form` serves domains that cannot always evaluate a piece
  at a point.  A point piece agrees with its neighbors when it is
  structurally equal to them, or when the domain evaluates both at the
  breakpoint to the same value; a point where neither test succeeds keeps
  its breakpoint.  The result is extensionally equivalent to the input but
  is not canonical.

"""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['pseudonormalform', 'canonical_form', 'equiv_piecewise',
           'normal_form']

import logging as _logging

from . import _domains
from . import _exc
from . import _nesting
from . import _operators


def canonical_form(expr, domain=None):

    """The canonical form of a piecewise expression.

    The expression is denested, every piece is canonicalized (exactly
    *2n+1* calls of :meth:`~spruce.piecewise.EffectiveDomain.canonicalize`
    for the *n* breakpoints of the denested operator), and neighboring
    pieces are merged left to right wherever the piecewise function stays
    the same.  The last pair is merged into the end piece by the same test.
    Finally every remaining point piece is replaced by the canonical
    constant of its value at its breakpoint.

    Undefined values compare equal, so a point where both neighboring
    region pieces and the point piece are undefined does not keep a
    breakpoint.

    :param expr:
        A piecewise expression.
    :type expr: :class:`~spruce.piecewise.Expression` or exact rational

    :param domain:
        The effective domain of the pieces.
    :type domain:
        :class:`~spruce.piecewise.EffectiveDomain` or :obj:`str` or null

    :rtype: :class:`~spruce.piecewise.PiecewiseOperator`

    :raise spruce.piecewise.EvaluationUnavailable:
        If *domain* cannot evaluate a point piece at its breakpoint.

    :raise spruce.piecewise.NotInDomain:
        If a piece is not a function of *domain*.

    """

    domain = _domains.as_domain(domain)

    def canmerge(a, b):
        return a.left_fn == b.left_fn \
               and domain.eval_at(a.pt_fn, a.right_pt) \
                    == domain.eval_at(b.left_fn, a.right_pt)

    merged = _merge_pass(_nesting.denest(expr), domain, canmerge)
    return _operators.PiecewiseOperator(
        (_operators.CondPair(pair.left_fn,
                             domain.constant(domain.eval_at(pair.pt_fn,
                                                            pair.right_pt)),
                             pair.right_pt)
         for pair in merged.pairs),
        merged.end)


def equiv_piecewise(p, q, domain=None):
    """Whether the piecewise expressions *p* and *q* are extensionally
    equivalent, by comparison of their :func:`canonical_form`."""
    domain = _domains.as_domain(domain)
    return canonical_form(p, domain=domain) == canonical_form(q, domain=domain)


def normal_form(expr, domain=None):

    """A normal form of a piecewise expression in a domain that may not
    evaluate its functions.

    Like :func:`canonical_form`, but a point piece and a region piece
    agree at their breakpoint when they are structurally equal, or else
    when :meth:`~spruce.piecewise.EffectiveDomain.eval_at` gives both the
    same value.  If the domain cannot evaluate them, they are taken to
    differ and the breakpoint is kept.  Point pieces are folded to
    constants only where they can be evaluated.

    With a domain that evaluates everything, the result is the
    :func:`canonical_form`.

    :param expr:
        A piecewise expression.
    :type expr: :class:`~spruce.piecewise.Expression` or exact rational

    :param domain:
        The effective domain of the pieces.
    :type domain:
        :class:`~spruce.piecewise.EffectiveDomain` or :obj:`str` or null

    :rtype: :class:`~spruce.piecewise.PiecewiseOperator`

    :raise spruce.piecewise.NotInDomain:
        If a piece is not a function of *domain*.

    """

    domain = _domains.as_domain(domain)

    def value_at(f, point):
        try:
            return domain.eval_at(f, point)
        except _exc.EvaluationUnavailable:
            return None

    def agree_at(f, g, point):
        if f == g:
            return True
        f_value = value_at(f, point)
        return f_value is not None and f_value == value_at(g, point)

    def canmerge(a, b):
        return a.left_fn == b.left_fn \
               and agree_at(a.pt_fn, b.left_fn, a.right_pt)

    def fold(f, point):
        value = value_at(f, point)
        return f if value is None else domain.constant(value)

    merged = _merge_pass(_nesting.denest(expr), domain, canmerge)
    return _operators.PiecewiseOperator(
        (_operators.CondPair(pair.left_fn, fold(pair.pt_fn, pair.right_pt),
                             pair.right_pt)
         for pair in merged.pairs),
        merged.end)


def pseudonormalform(p, domain=None):

    """The pseudo normal form of a piecewise operator.

    Every piece is canonicalized (exactly *2n+1* calls of
    :meth:`~spruce.piecewise.EffectiveDomain.canonicalize`), and each pair
    is merged into its right neighbor (the next pair or the end piece) when
    its region piece, its point piece and the neighbor's region piece are
    structurally equal.  The result is extensionally equivalent to *p*, and
    the pass is idempotent.

    :param p:
        A flat piecewise operator.
    :type p: :class:`~spruce.piecewise.PiecewiseOperator`

    :param domain:
        The effective domain of the pieces.
    :type domain:
        :class:`~spruce.piecewise.EffectiveDomain` or :obj:`str` or null

    :rtype: :class:`~spruce.piecewise.PiecewiseOperator`

    :raise spruce.piecewise.NotInDomain:
        If a piece is not a function of *domain*.

    """

    def canmerge(a, b):
        return a.left_fn == a.pt_fn and a.pt_fn == b.left_fn

    return _merge_pass(p, _domains.as_domain(domain), canmerge)


def _merge_pass(p, domain, canmerge):

    canonicalize = domain.canonicalize
    pairs = [_operators.CondPair(canonicalize(pair.left_fn),
                                 canonicalize(pair.pt_fn),
                                 pair.right_pt)
             for pair in p.pairs]
    end = _operators.EndPiece(canonicalize(p.end.fn))
    if not pairs:
        return _operators.PiecewiseOperator((), end)

    kept = [pairs[0]]
    for pair in pairs[1:]:
        last = kept[-1]
        if canmerge(last, pair):
            kept[-1] = _operators.CondPair(last.left_fn, pair.pt_fn,
                                           pair.right_pt)
        else:
            kept.append(pair)

    last = kept[-1]
    if canmerge(last, _operators.CondPair(end.fn, end.fn, last.right_pt)):
        kept.pop()

    _logger.debug('merged {} breakpoints into {}'.format(len(pairs),
                                                        len(kept)))
    return _operators.PiecewiseOperator(kept, end)


_logger = _logging.getLogger(__name__)
