"""
Codes correcting transpositions of consecutive symbols in q-ary strings.

The package gathers explicit constructions with their decoders, exact
(exhaustive) computation of distances and balls for short strings, and
numerics of counting formulas and rate bounds.

Author: Nikolay Lysenko
"""


__version__ = '0.1.0'
