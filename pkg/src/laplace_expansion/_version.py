# -*- coding: UTF-8 -*-
"""
version.py module

The version set here is read by setup.py and exposed as
the __version__ attribute of the package.
"""

__version_info__ = (1, 0, 0)
__version__ = ".".join([str(ver) for ver in __version_info__])
