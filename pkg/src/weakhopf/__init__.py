"""Exact computer algebra for weak multiplier Hopf algebras and
multiplier Hopf algebroids on finite (and lazily probed countable)
groupoid-scale inputs.

All arithmetic is over the rationals and exact; every structural claim
the package makes is backed by a finite, tolerance-free computation.
"""

__version__ = "0.1.0"
