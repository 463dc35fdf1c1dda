"""The piecewise expression language.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ('^' nat)?
    atom   := rational | 'x' | 'undef' | '(' expr ')' | pw
    pw     := 'pw' '{' branch (';' branch)* ';' 'otherwise' ':' expr '}'
    branch := 'x' ('<' | '=' | '<=') signed_rational ':' expr

A rational literal is an integer or ``a/b`` with no spaces, so ``1/2*x``
is a half of ``x`` and ``x / 1/2`` is twice ``x``.

Branches describe a range partition in increasing order of breakpoint:
``x < b`` gives the piece on the open region left of *b* (and right of the
previous breakpoint), ``x = b`` the piece at *b*, and ``x <= b`` both at
once.  An omitted ``x = b`` branch makes the point inherit the piece on its
left; an omitted ``x < b`` branch makes the region take the piece of the
next region, as in a chain of conditionals::

    >>> print(parse('pw { x < 0 : -x ; x = 0 : 0 ; otherwise : x }'))
    pw { x < 0 : -x ; x = 0 : 0 ; otherwise : x }
    >>> print(parse('pw { x <= 0 : -x ; otherwise : x }'))
    pw { x < 0 : -x ; x = 0 : -x ; otherwise : x }

``pw`` atoms may nest anywhere an expression may appear.

"""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['parse', 'pformat', 'as_json']

import json as _json

import pyparsing as _pp

from . import _domains
from . import _exc
from . import _expr
from . import _nesting
from . import _operators
from . import _order


def as_json(p, domain=None, **kwargs):

    """The machine-readable form of a piecewise operator.

    A JSON object with the breakpoints, as rational literals, and the
    *2n+1* pieces in order, as their canonical text::

        {"breakpoints": ["0"], "pieces": ["-x", "0", "x"]}

    :param p:
        A piecewise expression; it is denested first.
    :type p: :class:`~spruce.piecewise.Expression`

    :param domain:
        The effective domain of the pieces.
    :type domain:
        :class:`~spruce.piecewise.EffectiveDomain` or :obj:`str` or null

    :param kwargs:
        Keyword arguments for :func:`json.dumps`.

    :rtype: :obj:`str`

    """

    domain = _domains.as_domain(domain)
    p = _nesting.denest(p)
    return _json.dumps({'breakpoints': [_order.format_rational(point)
                                        for point in p.breakpoints],
                        'pieces': [domain.format(piece)
                                   for piece in p.pieces]},
                       **kwargs)


def parse(text):

    """Parse a piecewise expression.

    A rational literal binds tighter than division: ``x / 1/2`` is twice
    ``x``, and ``x/2/3`` is ``x`` divided by ``2/3``.  Spaces make the
    slash an operator, so ``x / 2 / 3`` is a sixth of ``x``.

    In a ``pw`` expression, a branch ``x = b`` with no ``x < b`` branch
    before it leaves the region left of *b* with the piece of the region
    right of *b*, so ``pw { x = 0 : 1 ; otherwise : 0 }`` is zero except
    at 0, and in ::

        pw { x < 0 : -x ; x = 0 : 0 ; x = 1 : 5 ; otherwise : x }

    the region between 0 and 1 is ``x``.  A branch ``x < b`` with no
    ``x = b`` branch after it gives *b* the piece of the region left of it.

    :param str text:
        An expression in the piecewise expression language.

    :rtype: :class:`~spruce.piecewise.Expression`

    :raise spruce.piecewise.ExpressionSyntaxError:
        If *text* is not a well-formed expression.

    :raise spruce.piecewise.NonMonotoneConditions:
        If the breakpoints of a ``pw`` expression's branches are not in
        increasing order.

    :raise spruce.piecewise.DuplicateCondition:
        If a ``pw`` expression repeats a branch condition.

    """

    try:
        tree = _GRAMMAR.parse_string(text, parse_all=True)[0]
    except _pp.ParseBaseException as exc:
        raise _exc.ExpressionSyntaxError(text, exc.loc, exc.msg)
    return _Builder(text).build(tree)


def pformat(p, domain=None):

    """The text of a piecewise expression in the customary display.

    The expression is denested.  A one-piece operator prints as its piece;
    otherwise each point piece is shown as its value at its breakpoint, or
    ``undef`` where it is undefined::

        pw { x < 0 : -x ; x = 0 : 0 ; otherwise : x }

    The text is accepted by :func:`parse`.

    :param p:
        A piecewise expression.
    :type p: :class:`~spruce.piecewise.Expression`

    :param domain:
        The effective domain that evaluates the point pieces.
    :type domain:
        :class:`~spruce.piecewise.EffectiveDomain` or :obj:`str` or null

    :rtype: :obj:`str`

    """

    domain = _domains.as_domain(domain)
    p = _nesting.denest(p)
    if not p.pairs:
        return str(p.end.fn)

    branches = []
    for pair in p.pairs:
        point = _order.format_rational(pair.right_pt)
        branches.append('x < {} : {}'.format(point, pair.left_fn))
        branches.append('x = {} : {}'
                         .format(point,
                                 domain.eval_at(pair.pt_fn, pair.right_pt)))
    branches.append('otherwise : {}'.format(p.end.fn))
    return 'pw {{ {} }}'.format(' ; '.join(branches))


class _Node(object):

    __slots__ = ('args', 'kind', 'loc')

    def __init__(self, kind, args, loc):
        self.args = args
        self.kind = kind
        self.loc = loc

    def __repr__(self):
        return '_Node({!r}, {!r}, {!r})'.format(self.kind, self.args,
                                                self.loc)


class _Builder(object):

    """Builds expressions from a syntax tree, checking ``pw`` branches."""

    def __init__(self, text):
        self._text = text

    def build(self, node):
        return getattr(self, '_build_' + node.kind)(node)

    def _add_condition(self, pairs, relation, point, fn, loc):
        # each pair is [region piece, point piece, breakpoint]; None marks
        # an omitted piece
        if pairs:
            last = pairs[-1]
            if point < last[2]:
                raise _exc.NonMonotoneConditions(
                    self._text, loc,
                    '{} follows {}'.format(_order.format_rational(point),
                                           _order.format_rational(last[2])))
            if point == last[2]:
                condition = 'x {} {}'.format(relation,
                                             _order.format_rational(point))
                if relation == '<':
                    if last[0] is not None:
                        raise _exc.DuplicateCondition(self._text, loc,
                                                      condition)
                    raise _exc.NonMonotoneConditions(
                        self._text, loc,
                        '{} follows x = {}'
                         .format(condition, _order.format_rational(point)))
                if last[1] is not None:
                    raise _exc.DuplicateCondition(self._text, loc, condition)
                last[1] = fn
                return

        if relation == '<':
            pairs.append([fn, None, point])
        else:
            pairs.append([None, fn, point])

    def _build_binary(self, node):
        op, left, right = node.args
        return self._BINARY_CLASSES[op](self.build(left), self.build(right))

    def _build_neg(self, node):
        return _expr.Negation(self.build(node.args[0]))

    def _build_pow(self, node):
        base, exponent = node.args
        return _expr.Power(self.build(base), exponent)

    def _build_pw(self, node):
        branches, otherwise = node.args
        pairs = []
        for branch in branches:
            relation, point_text, fn_node = branch.args
            point = self._rational(point_text, branch.loc)
            fn = self.build(fn_node)
            relations = ('<', '=') if relation == '<=' else (relation,)
            for relation in relations:
                self._add_condition(pairs, relation, point, fn, branch.loc)

        end = self.build(otherwise)
        region_fn = end
        for pair in reversed(pairs):
            if pair[0] is None:
                pair[0] = region_fn
            region_fn = pair[0]
        for pair in pairs:
            if pair[1] is None:
                pair[1] = pair[0]
        return _operators.PiecewiseOperator(pairs, end)

    def _build_rational(self, node):
        return _expr.Const(self._rational(node.args, node.loc))

    def _build_undef(self, node):
        return _expr.UNDEF

    def _build_x(self, node):
        return _expr.X

    def _rational(self, text, loc):
        try:
            return _order.as_breakpoint(text)
        except _exc.InvalidRational as exc:
            raise _exc.ExpressionSyntaxError(self._text, loc, str(exc))

    _BINARY_CLASSES = {'+': _expr.Sum,
                       '-': _expr.Difference,
                       '*': _expr.Product,
                       '/': _expr.Quotient,
                       }


def _fold_binary(s, loc, toks):
    tree = toks[0]
    for i in range(1, len(toks), 2):
        tree = _Node('binary', (toks[i], tree, toks[i + 1]), tree.loc)
    return tree


def _grammar():

    lpar, rpar, lbrace, rbrace, colon, semi = map(_pp.Suppress, '(){}:;')
    var = _pp.Keyword('x')
    expr = _pp.Forward()
    factor = _pp.Forward()

    rational = _pp.Regex(r'\d+(?:/\d+)?')\
                .set_parse_action(lambda s, loc, toks:
                                      _Node('rational', toks[0], loc))
    signed_rational = _pp.Regex(r'[+-]?\s*\d+(?:/\d+)?')
    nat = _pp.Regex(r'\d+').set_parse_action(lambda toks: int(toks[0]))

    branch = (_pp.Suppress(var) + _pp.one_of('<= < =') + signed_rational
              + colon + expr)\
              .set_parse_action(lambda s, loc, toks:
                                    _Node('branch', tuple(toks), loc))
    pw = (_pp.Suppress(_pp.Keyword('pw')) + lbrace
          + _pp.Group(branch + _pp.ZeroOrMore(semi + branch))
          + semi + _pp.Suppress(_pp.Keyword('otherwise')) + colon + expr
          + rbrace)\
          .set_parse_action(lambda s, loc, toks:
                                _Node('pw', (list(toks[0]), toks[1]), loc))

    atom = (rational
            | var.copy().set_parse_action(lambda s, loc, toks:
                                              _Node('x', (), loc))
            | _pp.Keyword('undef')
                 .set_parse_action(lambda s, loc, toks:
                                       _Node('undef', (), loc))
            | pw
            | lpar + expr + rpar)

    power = (atom + _pp.Optional(_pp.Suppress('^') + nat))\
             .set_parse_action(lambda s, loc, toks:
                                   toks[0] if len(toks) == 1
                                   else _Node('pow', (toks[0], toks[1]),
                                              loc))
    factor <<= (_pp.Suppress('-') + factor)\
                .set_parse_action(lambda s, loc, toks:
                                      _Node('neg', (toks[0],), loc)) \
               | power
    term = (factor + _pp.ZeroOrMore(_pp.one_of('* /') + factor))\
            .set_parse_action(_fold_binary)
    expr <<= (term + _pp.ZeroOrMore(_pp.one_of('+ -') + term))\
              .set_parse_action(_fold_binary)
    return expr


_GRAMMAR = _grammar()
