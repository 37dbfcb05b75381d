"""
Words in the 3-strand braid group.

A letter is a nonzero integer: ``1`` and ``2`` are the Artin generators
s1, s2 and ``3`` is the band generator s0 = s1^-1 s2 s1 of the
Birman-Ko-Lee presentation (stored as 3 so that it can carry a sign; the
index is read mod 3). A negative integer is the inverse letter.

Words are immutable. Every function here returns a fresh word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

ARTIN = "artin"
BKL = "bkl"
MODES = (ARTIN, BKL)

S0, S1, S2 = 3, 1, 2

_ATOMS = {
    "s1": (S1,),
    "s2": (S2,),
    "s0": (S0,),
    "D": (S1, S2, S1),
    "d": (S2, S1),
}
_TOKEN = re.compile(r"^(s0|s1|s2|D|d)(?:\^([+-]?\d+))?$")
_NAMES = {S1: "s1", S2: "s2", S0: "s0"}


class WordError(ValueError):
    """Raised for unparsable words or letters not allowed by the mode."""


class ModeError(WordError):
    pass


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...] = ()
    mode: str = ARTIN

    def __post_init__(self):
        if self.mode not in MODES:
            raise ModeError(f"unknown mode {self.mode!r}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if x == 0 or abs(x) > 3:
                raise WordError(f"invalid letter {x}")
            if self.mode == ARTIN and abs(x) == S0:
                raise ModeError("s0 is only allowed in BKL mode")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.letters[i], self.mode)
        return self.letters[i]

    def __mul__(self, other: Word) -> Word:
        mode = BKL if BKL in (self.mode, other.mode) else ARTIN
        return Word(self.letters + other.letters, mode)

    def __pow__(self, n: int) -> Word:
        if n < 0:
            return Word(invert(self).letters * (-n), self.mode)
        return Word(self.letters * n, self.mode)

    def __str__(self):
        return format_word(self)

    @property
    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def as_mode(self, mode: str) -> Word:
        return Word(self.letters, mode)


def word(letters: Iterable[int] = (), mode: str | None = None) -> Word:
    """Build a word, choosing BKL mode automatically when s0 occurs."""
    letters = tuple(letters)
    if mode is None:
        mode = BKL if any(abs(x) == S0 for x in letters) else ARTIN
    return Word(letters, mode)


def parse_word(text: str, mode: str | None = None) -> Word:
    """
    Parse the whitespace-separated token grammar::

        token := atom ('^' integer)?
        atom  := s1 | s2 | s0 | D | d

    ``D`` is s1 s2 s1 and ``d`` is s2 s1. A negative exponent expands to
    copies of the inverted atom. With ``mode=None`` the mode is BKL iff
    ``s0`` occurs; ``mode="artin"`` rejects ``s0``.
    """
    letters: list[int] = []
    pos = 0
    for tok in text.split():
        start = text.index(tok, pos)
        pos = start + len(tok)
        m = _TOKEN.match(tok)
        if m is None:
            raise WordError(f"syntax error at position {start}: {tok!r}")
        atom = _ATOMS[m.group(1)]
        n = int(m.group(2)) if m.group(2) is not None else 1
        if n >= 0:
            letters.extend(atom * n)
        else:
            inv = tuple(-x for x in reversed(atom))
            letters.extend(inv * (-n))
    if mode == ARTIN and S0 in map(abs, letters):
        raise ModeError("s0 is not allowed in Artin mode")
    return word(letters, mode)


def format_word(w: Word | Iterable[int]) -> str:
    """Canonical token form with runs collapsed: ``s1^2 s2 s1^-1``."""
    letters = w.letters if isinstance(w, Word) else tuple(w)
    out = []
    i = 0
    while i < len(letters):
        x = letters[i]
        j = i
        while j < len(letters) and letters[j] == x:
            j += 1
        run = j - i
        exp = run if x > 0 else -run
        name = _NAMES[abs(x)]
        out.append(name if exp == 1 else f"{name}^{exp}")
        i = j
    return " ".join(out)


def exponent_sum(w: Word | Iterable[int]) -> int:
    letters = w.letters if isinstance(w, Word) else w
    return sum(1 if x > 0 else -1 for x in letters)


def invert(w: Word) -> Word:
    return Word(tuple(-x for x in reversed(w.letters)), w.mode)


def free_reduce(w: Word) -> Word:
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return Word(tuple(stack), w.mode)


_TAU_DELTA = {1: 2, 2: 3, 3: 1}
_TAU_DELTA_INV = {2: 1, 3: 2, 1: 3}


def tau_delta_letter(x: int, times: int = 1) -> int:
    g = abs(x)
    for _ in range(times % 3):
        g = _TAU_DELTA[g]
    return g if x > 0 else -g


def tau_delta(w: Word, times: int = 1) -> Word:
    """Conjugation by the dual Garside element: the image of w under
    X -> d^-1 X d, realised letterwise by s1 -> s2 -> s0 -> s1."""
    return Word(tuple(tau_delta_letter(x, times) for x in w.letters), BKL)


def tau_Delta(w: Word) -> Word:
    """Conjugation X -> D^-1 X D on the Artin alphabet (swap s1 and s2)."""
    if any(abs(x) == S0 for x in w.letters):
        raise ModeError("tau_Delta is only defined on the Artin alphabet")
    return Word(tuple(3 - x if x > 0 else -3 - x for x in w.letters), w.mode)


def bkl_to_artin(w: Word) -> Word:
    out: list[int] = []
    for x in w.letters:
        if x == S0:
            out.extend((-S1, S2, S1))
        elif x == -S0:
            out.extend((-S1, -S2, S1))
        else:
            out.append(x)
    return Word(tuple(out), ARTIN)


def remove(w: Word, positions: Iterable[int]) -> Word:
    """Delete the letters at the given 1-based positions."""
    drop = set(positions)
    n = len(w)
    for i in drop:
        if not 1 <= i <= n:
            raise IndexError(f"position {i} out of range 1..{n}")
    return Word(tuple(x for i, x in enumerate(w.letters, 1) if i not in drop), w.mode)


DELTA = Word((S1, S2, S1))
SMALL_DELTA = Word((S2, S1))
EMPTY = Word()
