"""
Bands (conjugates of s1) and validation of band factorizations.

A braid of exponent sum 1 is quasipositive exactly when it is a band: any
quasipositive factorization of it has a single factor, and that factor is
the braid itself. Recognition therefore goes through the quasipositivity
search rather than a conjugacy algorithm.
"""

from __future__ import annotations

from typing import Sequence

from .factorsearch import is_quasipositive
from .garside import CanonicalBraid, equal, normalize, product
from .words import Word, exponent_sum


def _as_word(x: Word | CanonicalBraid) -> Word:
    return x.to_word() if isinstance(x, CanonicalBraid) else x


def is_band(x: Word | CanonicalBraid) -> bool:
    w = _as_word(x)
    return exponent_sum(w) == 1 and is_quasipositive(w)


def validate_factorization(x: Word | CanonicalBraid, factors: Sequence[Word | CanonicalBraid]) -> bool:
    """Every factor is a band and the factors multiply to ``x``."""
    if not all(is_band(f) for f in factors):
        return False
    total = product([normalize(_as_word(f)) for f in factors])
    return equal(total.to_word(), _as_word(x))
