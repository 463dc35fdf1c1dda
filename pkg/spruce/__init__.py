"""Spruce packages"""

__copyright__ = "Copyright (C) 2013 Ivan D Vasin"
__docformat__ = "restructuredtext"


__path__ = __import__('pkgutil').extend_path(__path__, __name__)
