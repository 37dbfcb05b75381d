"""
Built-in self checks.

``quick`` covers the worked examples of the theory (each a few milliseconds);
``full`` adds the exhaustive sweeps: uniqueness of orbits for positive words,
the bound on antisymmetries, pruning soundness and the rewriting engines.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import factorsearch as fs
from . import hurwitz as hw
from .bands import is_band
from .garside import DUAL, CanonicalBraid, conjugate, equal, normalize, to_dual_positive_form
from .polygon import ExcludedClass, antisymmetries, closed_representative, orbit_count_e2
from .rewrite import delta_power_words, lemma5_match, lemma6_shift, verify_shift
from .words import BKL, Word, bkl_to_artin, parse_word, remove, tau_Delta

EXAMPLE = "s1^2 s2^2 s1^2 s2^2 D^-2"
EXAMPLE_W = "s1^2 s2^2 s1^2 s2^2"


@dataclass
class Check:
    name: str
    ok: bool
    seconds: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return f"[{status}] {self.name}  {self.seconds:.2f}s{extra}"


def _F(*words) -> hw.Factorization:
    return hw.Factorization.from_words(words)


def _example_pair():
    W = parse_word(EXAMPLE_W)
    return fs.build_W_I(W, (1, 5)), fs.build_W_I(W, (3, 7))


def _quick_checks() -> list[tuple[str, Callable[[], bool]]]:
    w = parse_word

    def moves_example():
        f = _F("s1", "s2", "s1")
        g = hw.sigma_move(f, 2)
        h = hw.sigma_move(g, 1)
        return g.key == _F("s1", "s2 s1 s2^-1", "s2").key and h.key == _F("s2", "s1", "s2").key

    def equiv_example():
        ok, moves = hw.equivalent(_F("s1", "s2", "s1"), _F("s2", "s1", "s2"))
        return ok and [str(m) for m in moves] == ["S2", "S1"]

    def example_not_equivalent():
        a, b = _example_pair()
        return hw.equivalent(a, b) == (False, None)

    def example_partition():
        a, b = _example_pair()
        return len(hw.orbit_partition([a, b])) == 2 and len(
            hw.orbit_partition([_F("s1", "s2", "s1"), _F("s2", "s1", "s2")])) == 1

    def example_index_sets():
        sets = fs.enumerate_index_sets(w(EXAMPLE_W), 2)
        return (1, 5) in sets and (3, 7) in sets

    def excluded_delta():
        try:
            closed_representative(w("s1 s2"))
        except ExcludedClass:
            return True
        return False

    return [
        ("parse the example braid", lambda: len(w(EXAMPLE)) == 14),
        ("D is fixed by swapping s1, s2", lambda: equal(tau_Delta(w("D")), w("D"))),
        ("s0 expands to s1^-1 s2 s1", lambda: bkl_to_artin(w("s0")).letters == (-1, 2, 1)),
        ("normal form of s1 s2 s1", lambda: normalize(w("s1 s2 s1")) == CanonicalBraid("classical", 1, ())),
        ("normal form of s2 s1 s2", lambda: normalize(w("s2 s1 s2")) == CanonicalBraid("classical", 1, ())),
        ("dual normal form of s2 s1", lambda: normalize(w("s2 s1"), DUAL) == CanonicalBraid(DUAL, 1, ())),
        ("braid relation", lambda: equal(w("s1 s2 s1"), w("s2 s1 s2"))),
        ("dual positive forms of s1^-1, s2^-1", lambda: all(
            equal(W * Word((-1, -2), BKL), w(x)) and p == 1
            for x in ("s1^-1", "s2^-1") for W, p in [to_dual_positive_form(w(x))])),
        ("conjugating s2 by s1 gives s0", lambda: conjugate(normalize(w("s2")), normalize(w("s1"))) == normalize(w("s0"))),
        ("s2 and s0 are bands", lambda: is_band(w("s2")) and is_band(w("s0"))),
        ("Hurwitz moves on (s1, s2, s1)", moves_example),
        ("(s1,s2,s1) ~ (s2,s1,s2) with witness S2 S1", equiv_example),
        ("example factorizations are inequivalent", example_not_equivalent),
        ("orbit partitions of the examples", example_partition),
        ("removing positions 1, 5 from the example word", lambda: remove(w(EXAMPLE_W), (1, 5)) == w("s1 s2^2 s1 s2^2")),
        ("minimality of {2} in s1 s1", lambda: not fs.is_minimal(w("s1 s1"), (2,))),
        ("example index sets include {1,5} and {3,7}", example_index_sets),
        ("example braid is quasipositive", lambda: fs.is_quasipositive(w(EXAMPLE))),
        ("example braid has exactly two orbits", lambda: fs.count_orbits(w(EXAMPLE)) == 2),
        ("D has one orbit", lambda: fs.count_orbits(w("D")) == 1 and len(fs.orbit_representatives(w("D"))) == 1),
        ("s1 s2 lies in an excluded class", excluded_delta),
        ("antisymmetry count of the example is 2", lambda: orbit_count_e2(w(EXAMPLE)) == 2),
        ("s1 s2 has one orbit by the e=2 count", lambda: orbit_count_e2(w("s1 s2")) == 1),
    ]


def _positive_words(alphabet, max_len):
    for n in range(1, max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield t


def _full_checks(seed: int) -> list[tuple[str, Callable[[], bool]]]:
    def cor3():
        return all(fs.count_orbits(Word(t)) == 1 for t in _positive_words((1, 2), 8))

    def cor4():
        return all(fs.count_orbits(Word(t, BKL), mode=BKL) == 1 for t in _positive_words((1, 2, 3), 6))

    def antisym_bound():
        return all(len(antisymmetries(lab)) <= 2
                   for n in range(2, 13, 2) for lab in itertools.product((1, 2), repeat=n))

    def pruning():
        for t in _positive_words((1, 2), 8):
            W = Word(t)
            for p in range(4):
                if fs.enumerate_index_sets(W, p) != fs.enumerate_index_sets_unpruned(W, p):
                    return False
        return True

    def partners():
        for p in (1, 2, 3):
            for t in delta_power_words(p):
                for i in range(1, len(t) + 1):
                    lemma5_match(Word(t, BKL), i)
        return True

    def shifts():
        rng = random.Random(seed)
        done = 0
        while done < 100:
            W = Word(tuple(rng.choice((1, 2, 3)) for _ in range(rng.randint(3, 8))), BKL)
            for p in range(1, len(W) // 2 + 1):
                for I in fs.enumerate_index_sets(W, p, BKL):
                    for i in range(1, len(W)):
                        if (i in I) == (i + 1 in I):
                            continue
                        if normalize(Word(W.letters[i - 1:i + 1], BKL), DUAL) != CanonicalBraid(DUAL, 1, ()):
                            continue
                        J, moves = lemma6_shift(W, I, i)
                        if not verify_shift(W, I, J, moves):
                            return False
                        done += 1
        return True

    return [
        ("one orbit for positive Artin words of length <= 8", cor3),
        ("one orbit for BKL-positive words of length <= 6", cor4),
        ("at most two antisymmetries for n <= 12", antisym_bound),
        ("pruned and unpruned enumeration agree (length <= 8)", pruning),
        ("partner letters in all words equal to d^p, p <= 3", partners),
        ("100 index-shift move sequences replay exactly", shifts),
    ]


def run(level: str = "quick", seed: int = 0) -> list[Check]:
    checks = _quick_checks()
    if level == "full":
        checks += _full_checks(seed)
    results = []
    for name, fn in checks:
        t0 = time.perf_counter()
        try:
            ok, detail = bool(fn()), ""
        except Exception as exc:   # a crash is a failed check, not a crashed harness
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(Check(name, ok, time.perf_counter() - t0, detail))
    return results
