"""
fourtree: spanning trees of maximum degree four with co-trees of maximum
degree four, for internally 3-connected plane graphs.
"""

__version__ = "0.1.0"
