"""Numerical classification of smooth curves in P^5 of degree at most 15.

Exact integer calculators (Castelnuovo bounds, Brill-Noether counts, line
bundle cohomology on rational surfaces), a Diophantine enumerator of
surface models, Hilbert function profiles, and a self-checking catalog.
"""

__version__ = "0.1.0"
