"""
Rewriting operations on BKL-positive words equal to a power of d = s2 s1.

``lemma5_match`` finds, for a letter u of such a word, a partner letter v
separated from it by a power of d, with ``v d^k u`` (or ``u d^k v``) equal to
``d^(k+1)``. ``lemma6_shift`` uses that partner to move an index set off an
adjacent pair of letters whose product is d, returning the explicit Hurwitz
moves that carry one factorization to the other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .factorsearch import build_W_I
from .garside import DUAL, CanonicalBraid, normalize
from .hurwitz import Move, apply_moves, canonical_key
from .words import BKL, Word, remove

LEFT_OF_U = "LeftOfU"
RIGHT_OF_U = "RightOfU"


class Side(str, enum.Enum):
    LEFT_OF_U = LEFT_OF_U
    RIGHT_OF_U = RIGHT_OF_U


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class MatchResult:
    side: Side
    l: int      # 1-based position of v in the word
    k: int

    def to_json(self) -> dict:
        return {"side": self.side.value, "l": self.l, "k": self.k}


def _dual(letters) -> CanonicalBraid:
    return normalize(Word(tuple(letters), BKL), DUAL)


def _delta_power(letters) -> int | None:
    """p if the positive letters multiply to d^p, else None."""
    nf = _dual(letters)
    return nf.inf if not nf.factors else None


def check_match(w: Word, i: int, m: MatchResult) -> bool:
    a = w.letters
    u = a[i - 1]
    v = a[m.l - 1]
    if m.side == Side.LEFT_OF_U:
        if not m.l < i:
            return False
        middle = a[m.l: i - 1]
        return _delta_power(middle) == m.k and _delta_power((v, *middle, u)) == m.k + 1
    if not m.l > i:
        return False
    middle = a[i: m.l - 1]
    return _delta_power(middle) == m.k and _delta_power((u, *middle, v)) == m.k + 1


def lemma5_match(w: Word, i: int) -> MatchResult:
    """
    Partner of the letter at position ``i`` (1-based) of a BKL-positive word
    equal to d^p, p >= 1. Candidates are tried nearest first, left before
    right, and each is verified with the dual normal form.
    """
    if not w.is_positive:
        raise PreconditionError("word must be BKL-positive")
    if not 1 <= i <= len(w):
        raise IndexError(f"position {i} out of range 1..{len(w)}")
    p = _delta_power(w.letters)
    if p is None or p < 1:
        raise PreconditionError("word is not equal to a positive power of d")
    for dist in range(1, len(w)):
        # the separating word has even length 2k
        if (dist - 1) % 2:
            continue
        k = (dist - 1) // 2
        for side, l in ((Side.LEFT_OF_U, i - dist), (Side.RIGHT_OF_U, i + dist)):
            if 1 <= l <= len(w):
                m = MatchResult(side, l, k)
                if check_match(w, i, m):
                    return m
    raise AssertionError("no matching letter found; the word is not a power of d")


def lemma6_shift(w: Word, index_set, i: int) -> tuple[tuple[int, ...], list[Move]]:
    """
    Given W with W minus I equal to d^p and a_i a_(i+1) = d with exactly one
    of i, i+1 in I, return (J, moves) with J disjoint from {i, i+1}, W minus J
    equal to d^p, and ``moves`` carrying W_I to W_J.
    """
    I = tuple(index_set)
    n = len(w)
    if not 1 <= i < n:
        raise PreconditionError(f"pair ({i}, {i + 1}) out of range for length {n}")
    a = w.letters
    if _delta_power((a[i - 1], a[i])) != 1:
        raise PreconditionError(f"letters at {i}, {i + 1} do not multiply to d")
    in_i, in_next = i in I, (i + 1) in I
    if in_i == in_next:
        raise PreconditionError("exactly one of i, i+1 must lie in I")
    kept = remove(w, I)
    p = _delta_power(kept.letters)
    if p is None:
        raise PreconditionError("W minus I is not a power of d")

    x_pos, u_pos = (i + 1, i) if in_next else (i, i + 1)
    # position of u inside W minus I
    kept_positions = [pos for pos in range(1, n + 1) if pos not in I]
    u_in_kept = kept_positions.index(u_pos) + 1
    match = lemma5_match(kept, u_in_kept)
    l = kept_positions[match.l - 1]

    sorted_I = sorted(I)
    m = sorted_I.index(x_pos) + 1
    s = 1 + sum(1 for pos in sorted_I if pos < l)
    J = tuple(sorted({l} | (set(I) - {x_pos})))
    if s <= m:
        # v sits before x_s: carry X_m leftwards past X_s .. X_(m-1)
        moves = [Move(j, -1) for j in range(m - 1, s - 1, -1)]
    else:
        # v sits after x_(s-1): carry X_m rightwards past X_(m+1) .. X_(s-1)
        moves = [Move(j, 1) for j in range(m, s - 1)]
    return J, moves


def verify_shift(w: Word, index_set, J, moves) -> bool:
    """Replay ``moves`` on W_I and compare with W_J component-wise."""
    f = apply_moves(build_W_I(w, index_set, BKL), moves)
    return canonical_key(f) == canonical_key(build_W_I(w, J, BKL))


_DELTA_PAIRS = ((2, 1), (1, 3), (3, 2))


def delta_power_words(p: int) -> set[tuple[int, ...]]:
    """All BKL-positive words equal to d^p, by closure of (s2 s1)^p under
    the relations s2 s1 = s1 s0 = s0 s2."""
    start = (2, 1) * p
    seen = {start}
    stack = [start]
    while stack:
        t = stack.pop()
        for j in range(len(t) - 1):
            if (t[j], t[j + 1]) in _DELTA_PAIRS:
                for pair in _DELTA_PAIRS:
                    u = t[:j] + pair + t[j + 2:]
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
    return seen
