"""
Package where the signless Laplacian toolkit for planar graphs is implemented.

The toolkit computes the signless Laplacian spectral radius q(G) of planar
graphs, evaluates the classical degree bounds, verifies exact rational
certificates of the form Q(G)X <= rX and searches small triangulations for
the extremal graph K2 join P(n-2).
"""

__version__ = "1.0.0"
