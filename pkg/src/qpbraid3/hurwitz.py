"""
The Hurwitz action of B_k on k-tuples of braids in B3.

``sigma_move(f, i, +1)`` replaces ``(X_i, X_{i+1})`` by
``(X_i X_{i+1} X_i^-1, X_i)``; direction ``-1`` is its inverse,
``(X_{i+1}, X_{i+1}^-1 X_i X_{i+1})``. Tuples are compared through canonical
keys (classical normal forms of the entries).

Orbits are usually infinite: the full twist of B_k acts on a factorization
of X by simultaneous conjugation by X, so unless X is periodic the orbit
contains X^m (X_1, ..., X_k) X^-m for every m. What is finite is the number
of orbits. Equivalence is therefore decided without enumerating orbits:

* k <= 1: the tuples must coincide.
* k = 2: the orbit of (X_1, X_2) is {Sigma_1^n}; Sigma_1^2 is conjugation
  by X, and comparing band vectors in SL(2, Z) decides it exactly.
* k >= 3: a best-first bidirectional search (lightest tuples first) looks
  for a common tuple; reductions mod small N give finite orbits whose
  separation certifies inequivalence. If neither succeeds within the cap
  the question is reported as undecided, never answered by a guess.
"""

from __future__ import annotations

import heapq
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple, Sequence

from . import sl2
from .garside import CLASSICAL, CanonicalBraid, inverse, normalize, product
from .words import Word, format_word, free_reduce, parse_word

DEFAULT_CAP = 10**6
MODULI = (2, 3, 4, 5)
MODULAR_LIMIT = 200_000

Key = tuple


class CapExceeded(RuntimeError):
    """A search visited more states than allowed."""

    def __init__(self, cap: int, message: str | None = None):
        super().__init__(message or f"orbit search exceeded the cap of {cap} states")
        self.cap = cap


class InfiniteOrbit(CapExceeded):
    """The orbit is provably infinite, so no cap can be respected."""

    def __init__(self, reason: str):
        super().__init__(0, f"Hurwitz orbit is infinite: {reason}")


class Move(NamedTuple):
    index: int       # 1-based position i of the pair (i, i+1)
    direction: int   # +1 for Sigma_i, -1 for its inverse

    def __str__(self):
        return f"S{self.index}" if self.direction > 0 else f"S{self.index}^-1"

    @classmethod
    def parse(cls, text: str) -> Move:
        text = text.strip()
        if not text.startswith("S"):
            raise ValueError(f"bad move {text!r}")
        if text.endswith("^-1"):
            return cls(int(text[1:-3]), -1)
        return cls(int(text[1:]), 1)


def braid_key(b: CanonicalBraid) -> tuple:
    return (b.inf, b.factors)


@lru_cache(maxsize=1 << 16)
def braid_exponent_sum(b: CanonicalBraid) -> int:
    t = b.tables
    return t.length[t.garside] * b.inf + sum(t.length[f] for f in b.factors)


@lru_cache(maxsize=1 << 16)
def _weight(b: CanonicalBraid) -> int:
    t = b.tables
    return t.length[t.garside] * abs(b.inf) + sum(t.length[f] for f in b.factors)


@lru_cache(maxsize=1 << 16)
def _rho(b: CanonicalBraid) -> sl2.Matrix:
    return sl2.rho_braid(b)


@dataclass(frozen=True)
class Factorization:
    """An ordered tuple of braids (classical normal forms)."""

    factors: tuple[CanonicalBraid, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "factors", tuple(normalize(b) if b.structure != CLASSICAL else b for b in self.factors)
        )

    @classmethod
    def from_words(cls, words: Iterable[Word | str]) -> Factorization:
        return cls(tuple(normalize(parse_word(w) if isinstance(w, str) else w) for w in words))

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    @cached_property
    def product(self) -> CanonicalBraid:
        return product(self.factors)

    @cached_property
    def key(self) -> Key:
        return canonical_key(self)

    def words(self) -> list[str]:
        return [format_word(free_reduce(b.to_word())) for b in self.factors]

    def to_json(self) -> dict:
        return {"factors": self.words()}

    @classmethod
    def from_json(cls, data: dict | str) -> Factorization:
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or not isinstance(data.get("factors"), list):
            raise ValueError('factorization JSON must look like {"factors": ["word", ...]}')
        return cls.from_words(data["factors"])

    def __str__(self):
        return "(" + ", ".join(self.words()) + ")"


def canonical_key(f: Factorization | Sequence[CanonicalBraid]) -> Key:
    return tuple(braid_key(b) for b in f)


@lru_cache(maxsize=1 << 16)
def _inv(a: CanonicalBraid) -> CanonicalBraid:
    return inverse(a)


@lru_cache(maxsize=1 << 18)
def _conj_by(a: CanonicalBraid, b: CanonicalBraid) -> CanonicalBraid:
    """a b a^-1."""
    return product((a, b, _inv(a)))


def _move_tuple(t: tuple, i: int, direction: int) -> tuple:
    x, y = t[i - 1], t[i]
    if direction > 0:
        pair = (_conj_by(x, y), x)
    else:
        pair = (y, _conj_by(_inv(y), x))
    return t[: i - 1] + pair + t[i + 1:]


def sigma_move(f: Factorization, i: int, direction: int = 1) -> Factorization:
    if not 1 <= i < len(f):
        raise IndexError(f"move index {i} out of range for a tuple of length {len(f)}")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    return Factorization(_move_tuple(f.factors, i, direction))


def apply_moves(f: Factorization, moves: Iterable[Move | tuple[int, int]]) -> Factorization:
    for i, d in moves:
        f = sigma_move(f, i, d)
    return f


def invert_moves(moves: Sequence[Move]) -> list[Move]:
    return [Move(m.index, -m.direction) for m in reversed(moves)]


# -- orbit enumeration ---------------------------------------------------------

@dataclass
class Orbit:
    """A completed Hurwitz orbit with BFS parent pointers."""

    start: Factorization
    members: list[Factorization]
    _parent: dict = field(repr=False, default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, f: Factorization) -> bool:
        return canonical_key(f) in self._parent

    def witness(self, target: Factorization) -> list[Move] | None:
        """Moves taking ``start`` to ``target``, or None if not in the orbit."""
        key = canonical_key(target)
        if key not in self._parent:
            return None
        return _trace(self._parent, key)

    def to_json(self, witnesses: bool = False) -> dict:
        out = {"size": self.size, "members": [m.words() for m in self.members]}
        if witnesses:
            out["witnesses"] = [[str(mv) for mv in self.witness(m)] for m in self.members]
        return out


def _trace(parent: dict, key) -> list[Move]:
    moves = []
    while parent[key] is not None:
        key, move = parent[key]
        moves.append(move)
    moves.reverse()
    return moves


def _twist_moves_entry(entries: Sequence[CanonicalBraid]) -> bool:
    m = _rho(product(entries))
    if sl2.has_finite_order(m):
        return False
    for b in entries:
        v = sl2.band_vector(_rho(b))
        if sl2.sign_normal(sl2.mat_vec(m, v)) != v:
            return True
    return False


def infinite_orbit_reason(f: Factorization | tuple) -> str | None:
    """
    A certificate that the orbit of ``f`` is infinite, or None.

    The full twist of the braids acting on positions i..j conjugates that
    block of entries by its product P. If rho(P) has infinite order and moves
    the band vector of some entry of the block, the tuples obtained with
    P^m, m in Z, are pairwise distinct.
    """
    t = tuple(f)
    if len(t) < 2 or not all(_is_band_braid(b) for b in t):
        return None
    for i in range(len(t) - 1):
        for j in range(i + 2, len(t) + 1):
            if _twist_moves_entry(t[i:j]):
                return (
                    f"entries {i + 1}..{j} multiply to a braid of infinite order modulo the centre"
                    " whose powers, acting by conjugation, move an entry"
                )
    return None


def orbit(f: Factorization, cap: int | None = DEFAULT_CAP) -> Orbit:
    """
    The full Hurwitz orbit of ``f`` by breadth-first search, members sorted
    by canonical key. Raises InfiniteOrbit when the orbit is provably
    infinite and CapExceeded when more than ``cap`` states are reached.
    """
    reason = infinite_orbit_reason(f)
    if reason is not None:
        raise InfiniteOrbit(reason)
    limit = DEFAULT_CAP if cap is None else cap
    start = f.factors
    k = len(start)
    parent: dict = {canonical_key(start): None}
    tuples = {canonical_key(start): start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        tk = canonical_key(t)
        for i in range(1, k):
            for d in (1, -1):
                u = _move_tuple(t, i, d)
                uk = canonical_key(u)
                if uk in parent:
                    continue
                parent[uk] = (tk, Move(i, d))
                tuples[uk] = u
                if len(parent) > limit:
                    raise CapExceeded(limit)
                reason = infinite_orbit_reason(u)
                if reason is not None:
                    raise InfiniteOrbit(f"{reason} (in a tuple reached by the search)")
                queue.append(u)
    members = [Factorization(tuples[key]) for key in sorted(parent)]
    return Orbit(f, members, parent)


# -- equivalence ---------------------------------------------------------------

def _is_band_braid(b: CanonicalBraid) -> bool:
    if braid_exponent_sum(b) != 1:
        return False
    try:
        sl2.band_vector(_rho(b))
    except ValueError:
        return False
    return True


def _equivalent_pairs(f1: Factorization, f2: Factorization):
    """Exact decision for 2-tuples of bands; returns the move list or None."""
    x1, x2 = f1.factors
    y1 = f2.factors[0]
    m = _rho(f1.product)
    target = sl2.band_vector(_rho(y1))
    best = None
    # even powers: X^j (X1, X2) X^-j; odd powers start from (X1 X2 X1^-1, X1)
    for parity, first in ((0, x1), (1, _conj_by(x1, x2))):
        j = sl2.power_conjugator(m, sl2.band_vector(_rho(first)), target)
        if j is not None:
            n = 2 * j + parity
            if best is None or abs(n) < abs(best):
                best = n
    if best is None:
        return None
    return [Move(1, 1 if best > 0 else -1)] * abs(best)


def _modular_tuple(f: Factorization, n: int) -> tuple:
    return tuple(tuple(v % n for v in _rho(b)) for b in f)


_MODULAR_COMPONENTS: dict = {}   # (n, modular tuple) -> component id, or None if too large


def _modular_component(start: tuple, n: int, limit: int):
    """Id of the (finite) orbit of a tuple of matrices mod n, or None when
    the orbit has more than ``limit`` elements."""
    key = (n, start)
    if key in _MODULAR_COMPONENTS:
        return _MODULAR_COMPONENTS[key]
    seen = {start}
    queue = deque([start])
    k = len(start)
    while queue:
        t = queue.popleft()
        for i in range(k - 1):
            x, y = t[i], t[i + 1]
            xi = sl2.mat_inv(x, n)
            yi = sl2.mat_inv(y, n)
            for pair in (
                (sl2.mat_mul(sl2.mat_mul(x, y, n), xi, n), x),
                (y, sl2.mat_mul(sl2.mat_mul(yi, x, n), y, n)),
            ):
                u = t[:i] + pair + t[i + 2:]
                if u not in seen:
                    seen.add(u)
                    if len(seen) > limit:
                        _MODULAR_COMPONENTS[key] = None
                        return None
                    queue.append(u)
    ident = min(seen)
    for t in seen:
        _MODULAR_COMPONENTS[(n, t)] = ident
    return ident


def separated_mod(f1: Factorization, f2: Factorization, moduli=MODULI, limit: int = MODULAR_LIMIT) -> int | None:
    """A modulus N for which the reductions of f1 and f2 lie in different
    (finite) orbits, or None."""
    for n in moduli:
        c1 = _modular_component(_modular_tuple(f1, n), n, limit)
        if c1 is None:
            continue
        if _modular_component(_modular_tuple(f2, n), n, limit) != c1:
            return n
    return None


def _bidirectional(f1: Factorization, f2: Factorization, cap: int):
    """Best-first search from both ends. Returns (moves, exhausted)."""
    k = len(f1)
    starts = (f1.factors, f2.factors)
    parents = ({}, {})
    heaps = ([], [])
    counter = 0
    for side in (0, 1):
        key = canonical_key(starts[side])
        parents[side][key] = None
        heapq.heappush(heaps[side], (sum(map(_weight, starts[side])), counter, starts[side]))
        counter += 1
    meet = canonical_key(f2) if canonical_key(f1) == canonical_key(f2) else None
    while meet is None and (heaps[0] or heaps[1]):
        side = 0 if heaps[0] and (not heaps[1] or heaps[0][0] <= heaps[1][0]) else 1
        _, _, t = heapq.heappop(heaps[side])
        tk = canonical_key(t)
        for i in range(1, k):
            for d in (1, -1):
                u = _move_tuple(t, i, d)
                uk = canonical_key(u)
                if uk in parents[side]:
                    continue
                parents[side][uk] = (tk, Move(i, d))
                if uk in parents[1 - side]:
                    meet = uk
                    break
                heapq.heappush(heaps[side], (sum(map(_weight, u)), counter, u))
                counter += 1
            if meet is not None:
                break
        if len(parents[0]) + len(parents[1]) > cap:
            return None, False
    if meet is None:
        # one side's reachable set was exhausted without meeting the other
        return None, True
    return _trace(parents[0], meet) + invert_moves(_trace(parents[1], meet)), False


def equivalent(f1: Factorization, f2: Factorization, cap: int | None = DEFAULT_CAP):
    """
    Decide Hurwitz equivalence. Returns ``(True, moves)`` where replaying
    ``moves`` on ``f1`` gives ``f2``, or ``(False, None)``. Raises
    CapExceeded if the question could not be settled within ``cap`` states.
    """
    cap = DEFAULT_CAP if cap is None else cap
    if len(f1) != len(f2) or f1.product != f2.product:
        return False, None
    if canonical_key(f1) == canonical_key(f2):
        return True, []
    if len(f1) < 2:
        return False, None
    bands = all(_is_band_braid(b) for b in (*f1, *f2))
    if len(f1) == 2 and bands:
        moves = _equivalent_pairs(f1, f2)
        return (True, moves) if moves is not None else (False, None)
    if bands and separated_mod(f1, f2) is not None:
        return False, None
    moves, exhausted = _bidirectional(f1, f2, cap)
    if moves is not None:
        return True, moves
    if exhausted:
        return False, None
    raise CapExceeded(cap, f"Hurwitz equivalence undecided within {cap} states")


def orbit_partition(fs: Sequence[Factorization], cap: int | None = DEFAULT_CAP) -> list[list[Factorization]]:
    """Group ``fs`` into Hurwitz classes, ordered by least canonical key."""
    ordered = sorted(fs, key=canonical_key)
    reps: list[Factorization] = []
    groups: list[list[Factorization]] = []
    for f in ordered:
        for rep, group in zip(reps, groups):
            if canonical_key(rep) == canonical_key(f) or equivalent(rep, f, cap)[0]:
                group.append(f)
                break
        else:
            reps.append(f)
            groups.append([f])
    return groups
