"""
Quasipositive factorizations from positive words.

For a positive word ``W = a_1 ... a_n`` and an index set ``I``, the tuple
``W_I`` takes the letters at positions in ``I`` as generators conjugated by
the prefix of the remaining letters. ``W_I`` factors ``W G^-p`` (G = D or
d) exactly when the letters outside ``I`` multiply to ``G^p``. Every Hurwitz
orbit of factorizations contains such a ``W_I`` with ``I`` minimal, which
turns quasipositivity and orbit counting into a finite subset search.

The search is a depth-first walk over positions. A branch is cut as soon
as the letters it has decided to keep no longer left-divide ``G^p``
(tested incrementally: a positive braid P divides G^p iff sup(P) <= p),
or when too few positions are left to complete the subset.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .garside import (
    CLASSICAL,
    DUAL,
    CanonicalBraid,
    _State,
    inverse,
    is_garside_power,
    normalize,
    product,
    structure_tables,
    to_dual_positive_form,
    to_positive_form,
)
from .hurwitz import DEFAULT_CAP, Factorization, canonical_key, orbit_partition
from .words import ARTIN, BKL, Word, exponent_sum, free_reduce, format_word, remove

IndexSet = tuple[int, ...]

_GARSIDE_WEIGHT = {ARTIN: 3, BKL: 2}
_STRUCTURE = {ARTIN: CLASSICAL, BKL: DUAL}

__all__ = [
    "Candidate",
    "IndexSet",
    "build_W_I",
    "count_orbits",
    "enumerate_index_sets",
    "enumerate_index_sets_unpruned",
    "is_minimal",
    "is_quasipositive",
    "minimalize",
    "orbit_representatives",
    "remove",
    "report",
    "representatives_from_positive",
]


@dataclass(frozen=True)
class Candidate:
    word: Word
    index_set: IndexSet
    p: int
    mode: str
    factorization: Factorization

    def to_json(self) -> dict:
        return {"I": list(self.index_set), "factors": self.factorization.words()}


def _check_index_set(w: Word, index_set) -> IndexSet:
    I = tuple(index_set)
    if any(b <= a for a, b in zip(I, I[1:])):
        raise ValueError(f"index set must be strictly increasing: {I}")
    for i in I:
        if not 1 <= i <= len(w):
            raise IndexError(f"position {i} out of range 1..{len(w)}")
    return I


def is_minimal(w: Word, index_set) -> bool:
    """No i in I with i-1 outside I and a_{i-1} == a_i."""
    I = set(_check_index_set(w, index_set))
    a = w.letters
    return not any(i >= 2 and i - 1 not in I and a[i - 2] == a[i - 1] for i in I)


def minimalize(w: Word, index_set) -> IndexSet:
    """Shift positions left across equal letters until the set is minimal.
    The tuple W_I does not change under these shifts."""
    I = set(_check_index_set(w, index_set))
    a = w.letters
    changed = True
    while changed:
        changed = False
        for i in sorted(I):
            if i >= 2 and i - 1 not in I and a[i - 2] == a[i - 1]:
                I.remove(i)
                I.add(i - 1)
                changed = True
    return tuple(sorted(I))


def _letter_braid(x: int) -> CanonicalBraid:
    return normalize(Word((x,), BKL if abs(x) == 3 else ARTIN))


def build_W_I(w: Word, index_set, mode: str | None = None) -> Factorization:
    """The tuple (A_j x_j A_j^-1) for the letters x_j at the positions in I."""
    I = _check_index_set(w, index_set)
    chosen = set(I)
    factors = []
    prefix: list[CanonicalBraid] = []
    a_j = normalize(Word())
    for pos, x in enumerate(w.letters, 1):
        if pos in chosen:
            factors.append(product((a_j, _letter_braid(x), inverse(a_j))))
        else:
            prefix.append(_letter_braid(x))
            a_j = product((a_j, prefix[-1]))
    return Factorization(tuple(factors))


def _subset_size(w: Word, p: int, mode: str) -> int:
    if p < 0:
        raise ValueError("p must be non-negative")
    if not w.is_positive:
        raise ValueError("enumeration needs a positive word")
    return exponent_sum(w) - _GARSIDE_WEIGHT[mode] * p


def iter_index_sets(w: Word, p: int, mode: str = ARTIN) -> Iterator[IndexSet]:
    """Minimal I of the forced size with W minus I equal to G^p, in
    lexicographic order."""
    k = _subset_size(w, p, mode)
    n = len(w)
    if k < 0 or k > n:
        return
    tables = structure_tables(_STRUCTURE[mode])
    if mode == ARTIN and any(x == 3 for x in w.letters):
        raise ValueError("s0 in an Artin-mode enumeration")
    letters = w.letters
    simple = [tables.letter(x) for x in letters]
    keep_total = n - k
    target_f: tuple = ()

    def walk(pos, chosen, in_prev, inf, factors):
        # pos: 0-based next position; chosen: positions picked so far
        n_chosen = len(chosen)
        if pos == n:
            if inf == p and tuple(factors) == target_f:
                yield tuple(chosen)
            return
        remaining = n - pos
        n_kept = pos - n_chosen
        # take letter pos+1 into I
        if n_chosen < k and not (pos > 0 and not in_prev and letters[pos - 1] == letters[pos]):
            chosen.append(pos + 1)
            yield from walk(pos + 1, chosen, True, inf, factors)
            chosen.pop()
        # keep it
        if n_kept < keep_total and k - n_chosen <= remaining - 1:
            st = _State(tables, inf, factors)
            st.times_simple(simple[pos])
            if st.inf + len(st.f) <= p:
                yield from walk(pos + 1, chosen, False, st.inf, st.f)

    yield from walk(0, [], False, 0, [])


def enumerate_index_sets(w: Word, p: int, mode: str = ARTIN) -> list[IndexSet]:
    return list(iter_index_sets(w, p, mode))


def enumerate_index_sets_unpruned(w: Word, p: int, mode: str = ARTIN) -> list[IndexSet]:
    """Reference search over all subsets of the forced size."""
    k = _subset_size(w, p, mode)
    if k < 0 or k > len(w):
        return []
    structure = _STRUCTURE[mode]
    return [
        I
        for I in combinations(range(1, len(w) + 1), k)
        if is_minimal(w, I) and is_garside_power(remove(w, I), p, structure)
    ]


def positive_form(x: Word, mode: str = ARTIN) -> tuple[Word, int]:
    return to_positive_form(x) if mode == ARTIN else to_dual_positive_form(x)


def is_quasipositive(x: Word, mode: str = ARTIN) -> bool:
    e = exponent_sum(free_reduce(x))
    if e < 0:
        return False
    if e == 0:
        return normalize(x).is_identity()
    W, p = positive_form(x, mode)
    return next(iter_index_sets(W, p, mode), None) is not None


def representatives_from_positive(
    W: Word, p: int, mode: str = ARTIN, cap: int | None = DEFAULT_CAP
) -> list[Candidate]:
    """One W_I per Hurwitz orbit of factorizations of W G^-p, each the one
    with the lexicographically least index set."""
    candidates = [
        Candidate(W, I, p, mode, build_W_I(W, I, mode)) for I in iter_index_sets(W, p, mode)
    ]
    if not candidates:
        return []
    by_key: dict = {}
    for c in candidates:
        by_key.setdefault(canonical_key(c.factorization), []).append(c)
    groups = orbit_partition([cs[0].factorization for cs in by_key.values()], cap=cap)
    reps = []
    for group in groups:
        members = [c for f in group for c in by_key[canonical_key(f)]]
        reps.append(min(members, key=lambda c: c.index_set))
    reps.sort(key=lambda c: c.index_set)
    return reps


def orbit_representatives(x: Word, mode: str = ARTIN, cap: int | None = DEFAULT_CAP) -> list[Candidate]:
    if exponent_sum(x) < 0:
        return []
    W, p = positive_form(x, mode)
    return representatives_from_positive(W, p, mode, cap)


def count_orbits(x: Word, mode: str = ARTIN, cap: int | None = DEFAULT_CAP) -> int:
    return len(orbit_representatives(x, mode, cap))


def report(x: Word, mode: str = ARTIN, cap: int | None = DEFAULT_CAP) -> dict:
    """JSON-ready summary of the quasipositivity analysis of ``x``."""
    W, p = positive_form(x, mode)
    reps = orbit_representatives(x, mode, cap)
    return {
        "input": format_word(x),
        "positive_form": {"W": format_word(W), "p": p},
        "quasipositive": bool(reps),
        "orbit_count": len(reps),
        "representatives": [c.to_json() for c in reps],
    }
