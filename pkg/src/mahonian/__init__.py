"""
Mahonian and Euler-Mahonian statistics on words, the bijections between
them, set partitions via their Mahonian words, and q-Stirling numbers.

Submodules: ``words``, ``statistics``, ``bijections``, ``partitions``,
``qpoly``, ``verify`` and ``cli``.
"""

from .errors import *  # noqa: F401,F403
from .words import content, enumerate_pm, enumerate_with_tail, enumerate_words, std, istd
from .statistics import inv, maj, des, maj_d, z_index, r_maj, den, exc_den, mak, mad, mstc
from .bijections import foata, foata_d, han_z, psi_m, rawlings, han_den, csz_phi
from .partitions import SetPartition, enumerate_partitions, mahonian_word
from .qpoly import QPoly, TQPoly, carlitz_stirling, johnson_stirling

__version__ = "0.1.0"
