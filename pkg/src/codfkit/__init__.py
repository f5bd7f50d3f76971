"""codfkit: an exact toolkit for closed ordered differential fields.

Differential polynomial algebra over Q, the star translation between
differential and algebraic definable sets, triangulation into regular
branches, desk-scale cylindrical algebraic decomposition with real
quantifier elimination, star-set construction with density certificates,
formal power-series witness lifting, and local-group construction.
"""

__version__ = "0.1.0"
