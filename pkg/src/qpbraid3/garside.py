"""
Exact word problem in B3 through Garside normal forms.

Two Garside structures are supported:

* ``classical``: Garside element D = s1 s2 s1, simples
  1, s1, s2, s1s2, s2s1, D.
* ``dual`` (Birman-Ko-Lee): Garside element d = s2 s1 = s1 s0 = s0 s2,
  simples 1, s1, s2, s0, d.

A braid is stored as its left normal form ``G^inf f_1 ... f_l`` where the
``f_i`` are proper simples (neither 1 nor G) and every adjacent pair is
left-weighted. All multiplication tables are built once at import time.
Equality of braids is always decided in the classical structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _perms
from typing import Iterable, Sequence

from .words import ARTIN, BKL, S0, S1, S2, Word, bkl_to_artin, free_reduce, word

CLASSICAL = "classical"
DUAL = "dual"


class _Structure:
    """Lookup tables for one Garside structure of B3."""

    def __init__(self, name, simples, mul, garside, conj_back, garside_symbol):
        self.name = name
        self.simples = simples                # index -> positive letter tuple
        self.index = {w: i for i, w in enumerate(simples)}
        self.n = len(simples)
        self.identity = 0
        self.garside = garside
        self.garside_symbol = garside_symbol
        self.mul = mul                        # mul[x][y] = index of xy, or -1
        self.length = [len(w) for w in simples]
        self.conj_back = conj_back            # G^-1 x G
        self.conj_fwd = [0] * self.n          # G x G^-1
        for x, y in enumerate(conj_back):
            self.conj_fwd[y] = x
        n = self.n
        self.quotient = [[-1] * n for _ in range(n)]   # quotient[d][y] = d^-1 y
        for d in range(n):
            for z in range(n):
                y = mul[d][z]
                if y >= 0:
                    self.quotient[d][y] = z
        self.left_comp = [self.quotient_left(x) for x in range(n)]
        self.renorm = [[self._renorm(x, y) for y in range(n)] for x in range(n)]

    def quotient_left(self, x):
        """The simple c with c x = G."""
        for c in range(self.n):
            if self.mul[c][x] == self.garside:
                return c
        raise AssertionError("no left complement")

    def _renorm(self, x, y):
        best = self.identity
        for d in range(self.n):
            if self.quotient[d][y] >= 0 and self.mul[x][d] >= 0:
                if self.length[d] > self.length[best]:
                    best = d
        return self.mul[x][best], self.quotient[best][y]

    def letter(self, x):
        return self.index[(x,)]


def _perm_of(letters):
    p = [0, 1, 2]
    for x in letters:
        i = x - 1
        p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def _classical():
    simples = [(), (S1,), (S2,), (S1, S2), (S2, S1), (S1, S2, S1)]
    perm_index = {_perm_of(w): i for i, w in enumerate(simples)}
    assert len(perm_index) == 6 and set(perm_index) == set(_perms(range(3)))

    def inversions(p):
        return sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])

    mul = [[-1] * 6 for _ in range(6)]
    for x, wx in enumerate(simples):
        for y, wy in enumerate(simples):
            p = _perm_of(wx + wy)
            if inversions(p) == len(wx) + len(wy):
                mul[x][y] = perm_index[p]
    swap = {(): (), (S1,): (S2,), (S2,): (S1,), (S1, S2): (S2, S1),
            (S2, S1): (S1, S2), (S1, S2, S1): (S1, S2, S1)}
    conj = [simples.index(swap[w]) for w in simples]
    return _Structure(CLASSICAL, simples, mul, 5, conj, "D")


def _dual():
    simples = [(), (S1,), (S2,), (S0,), (S2, S1)]
    mul = [[-1] * 5 for _ in range(5)]
    for x in range(5):
        mul[0][x] = x
        mul[x][0] = x
    # s2 s1 = s1 s0 = s0 s2 = d
    for a, b in ((S2, S1), (S1, S0), (S0, S2)):
        mul[simples.index((a,))][simples.index((b,))] = 4
    # d^-1 x d: s1 -> s2 -> s0 -> s1
    conj = [0, 2, 3, 1, 4]
    return _Structure(DUAL, simples, mul, 4, conj, "d")


_STRUCTURES = {CLASSICAL: _classical(), DUAL: _dual()}


def structure_tables(structure: str) -> _Structure:
    try:
        return _STRUCTURES[structure]
    except KeyError:
        raise ValueError(f"unknown Garside structure {structure!r}") from None


@dataclass(frozen=True, order=True)
class CanonicalBraid:
    """Left normal form ``G^inf * f_1 ... f_l``; factors are simple indices."""

    structure: str
    inf: int
    factors: tuple[int, ...] = ()

    @property
    def tables(self) -> _Structure:
        return _STRUCTURES[self.structure]

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def factor_words(self) -> list[tuple[int, ...]]:
        t = self.tables
        return [t.simples[f] for f in self.factors]

    def to_word(self) -> Word:
        t = self.tables
        g = t.simples[t.garside]
        if self.inf >= 0:
            letters = list(g * self.inf)
        else:
            letters = [-x for x in reversed(g)] * (-self.inf)
        for f in self.factors:
            letters.extend(t.simples[f])
        return word(letters, BKL if self.structure == DUAL else ARTIN)

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def __mul__(self, other: CanonicalBraid) -> CanonicalBraid:
        return multiply(self, other)

    def __invert__(self) -> CanonicalBraid:
        return inverse(self)

    def __str__(self):
        return format_canonical(self)


def format_canonical(b: CanonicalBraid) -> str:
    from .words import format_word

    t = b.tables
    parts = []
    if b.inf != 0 or not b.factors:
        parts.append(t.garside_symbol if b.inf == 1 else f"{t.garside_symbol}^{b.inf}")
    parts.extend(format_word(t.simples[f]) for f in b.factors)
    return " · ".join(parts)


# -- normal form engine ------------------------------------------------------

class _State:
    __slots__ = ("t", "inf", "f")

    def __init__(self, tables, inf=0, factors=()):
        self.t = tables
        self.inf = inf
        self.f = list(factors)

    def times_garside(self, k):
        if k == 0:
            return
        self.inf += k
        table = self.t.conj_back if k > 0 else self.t.conj_fwd
        f = self.f
        for _ in range(abs(k) % (3 if self.t.name == DUAL else 2)):
            f[:] = [table[x] for x in f]

    def times_simple(self, s):
        t = self.t
        if s == t.identity:
            return
        f = self.f
        f.append(s)
        renorm = t.renorm
        j = len(f) - 2
        while j >= 0:
            a, b = renorm[f[j]][f[j + 1]]
            if a == f[j]:
                break
            f[j] = a
            f[j + 1] = b
            j -= 1
        g = t.garside
        lead = 0
        while lead < len(f) and f[lead] == g:
            lead += 1
        if lead:
            del f[:lead]
            # leading G's sit to the left of everything already
            self.inf += lead
        if t.identity in f:
            f[:] = [x for x in f if x != t.identity]

    def times_letter(self, x):
        t = self.t
        if x > 0:
            self.times_simple(t.letter(x))
        else:
            self.times_garside(-1)
            self.times_simple(t.left_comp[t.letter(-x)])

    def result(self):
        return CanonicalBraid(self.t.name, self.inf, tuple(self.f))


def _letters_for(w, structure):
    if isinstance(w, CanonicalBraid):
        w = w.to_word()
    if not isinstance(w, Word):
        w = word(w)
    if structure == CLASSICAL and w.mode == BKL:
        w = bkl_to_artin(w)
    return w.letters


def normalize(w: Word | Iterable[int] | CanonicalBraid, structure: str = CLASSICAL) -> CanonicalBraid:
    """Left normal form of a word (or of a braid given in the other structure)."""
    tables = structure_tables(structure)
    if isinstance(w, CanonicalBraid) and w.structure == structure:
        return w
    state = _State(tables)
    for x in _letters_for(w, structure):
        state.times_letter(x)
    return state.result()


def multiply(a: CanonicalBraid, b: CanonicalBraid) -> CanonicalBraid:
    if a.structure != b.structure:
        b = normalize(b, a.structure)
    state = _State(a.tables, a.inf, a.factors)
    state.times_garside(b.inf)
    for f in b.factors:
        state.times_simple(f)
    return state.result()


def product(braids: Sequence[CanonicalBraid], structure: str = CLASSICAL) -> CanonicalBraid:
    state = _State(structure_tables(structure))
    for b in braids:
        if b.structure != structure:
            b = normalize(b, structure)
        state.times_garside(b.inf)
        for f in b.factors:
            state.times_simple(f)
    return state.result()


def inverse(a: CanonicalBraid) -> CanonicalBraid:
    t = a.tables
    state = _State(t)
    for f in reversed(a.factors):
        state.times_garside(-1)
        state.times_simple(t.left_comp[f])
    state.times_garside(-a.inf)
    return state.result()


def conjugate(x: CanonicalBraid, g: CanonicalBraid) -> CanonicalBraid:
    """g^-1 x g."""
    return product((inverse(g), x, g), x.structure)


def identity(structure: str = CLASSICAL) -> CanonicalBraid:
    return CanonicalBraid(structure, 0, ())


def garside_power(p: int, structure: str = CLASSICAL) -> CanonicalBraid:
    return CanonicalBraid(structure, p, ())


def equal(u, v) -> bool:
    """Equality in B3, decided by classical normal forms."""
    return normalize(u) == normalize(v)


def is_garside_power(w, p: int, structure: str = CLASSICAL) -> bool:
    if p < 0:
        raise ValueError("p must be non-negative")
    return normalize(w, structure) == CanonicalBraid(structure, p, ())


def is_prefix_divisor(prefix, p: int, structure: str = CLASSICAL) -> bool:
    """Whether the positive word ``prefix`` left-divides G^p."""
    if p < 0:
        raise ValueError("p must be non-negative")
    nf = normalize(prefix, structure)
    quotient = multiply(inverse(nf), garside_power(p, structure))
    return quotient.inf >= 0


# -- positive forms ------------------------------------------------------------

_ARTIN_COMP = {S1: (S2, S1), S2: (S1, S2)}     # s1^-1 = s2 s1 D^-1, s2^-1 = s1 s2 D^-1
_DUAL_COMP = {S1: S0, S2: S1, S0: S2}          # x^-1 = y d^-1 with x y = d


def to_positive_form(w: Word) -> tuple[Word, int]:
    """
    Write ``w`` as ``W D^-p`` with W a positive Artin word.

    Negative letters of the freely reduced word are eliminated left to
    right; each contributes one D^-1 which is moved to the right end by
    swapping s1 and s2 in everything it passes.
    """
    if w.mode == BKL:
        w = bkl_to_artin(w)
    w = free_reduce(w)
    out: list[int] = []
    p = 0
    for x in w.letters:
        piece = (x,) if x > 0 else _ARTIN_COMP[-x]
        if p % 2:
            piece = tuple(3 - y for y in piece)
        out.extend(piece)
        if x < 0:
            p += 1
    return Word(tuple(out), ARTIN), p


def to_dual_positive_form(w: Word) -> tuple[Word, int]:
    """Write ``w`` as ``W d^-p`` with W a BKL-positive word."""
    from .words import tau_delta_letter

    w = free_reduce(w)
    out: list[int] = []
    p = 0
    for x in w.letters:
        y = x if x > 0 else _DUAL_COMP[-x]
        out.append(tau_delta_letter(y, p))
        if x < 0:
            p += 1
    return Word(tuple(out), BKL), p
