"""Piecewise function testing."""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

from ._cases import *
from ._fixtures import *
from ._generators import *
from ._strategies import *
