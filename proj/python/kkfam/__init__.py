"""Kruskal-Katona extremal families: decompositions, shadows, the
minimal-non-face encoding, the bins-balls-wall process and the depth-aware
decision algorithm."""

from kkfam._core import *  # noqa: F401,F403

__version__ = "0.1.0"
