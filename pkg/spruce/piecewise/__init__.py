"""Piecewise-defined functions.

Piecewise operators over exact rational breakpoints, with refinement,
lifted arithmetic, definitional denesting, and a canonical form
parameterized by an effective domain of piece functions::

    >>> from spruce.piecewise import *
    >>> abs_ = parse('pw { x < 0 : -x ; x = 0 : 0 ; otherwise : x }')
    >>> evaluate(abs_, -5)
    defined('5')
    >>> print(pformat(canonical_form(abs_ * abs_ - X ** 2)))
    0

"""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__credits__ = ["Ivan D Vasin"]
__maintainer__ = "Ivan D Vasin"
__email__ = "nisavid@gmail.com"
__docformat__ = "restructuredtext"

from ._exc import *
from ._stats import *
from ._order import *
from ._expr import *
from ._domains import *
from ._polynomials import *
from ._rationals import *
from ._operators import *
from ._nesting import *
from ._canon import *
from ._oracle import *
from ._syntax import *
from ._bench import *
