import itertools
import random

from hypothesis import given, settings

from qpbraid3.bands import is_band, validate_factorization
from qpbraid3.garside import normalize
from qpbraid3.words import Word, exponent_sum, parse_word

from .conftest import artin_words
from .oracles import is_band_bruteforce, reduced_words


def test_is_band_examples():
    assert is_band(parse_word("s2"))
    assert is_band(parse_word("s0"))
    assert is_band(normalize(parse_word("s1 s2 s1^-1")))
    assert not is_band(parse_word("s1 s2"))
    assert not is_band(parse_word("s1^-1"))


def test_commutator_times_generator_matches_conjugator_search():
    w = parse_word("s1 s2 s1^-1 s2^-1 s1")
    assert is_band(w) == is_band_bruteforce(w.letters, max_conj=6)


def test_validate_factorization_examples():
    assert validate_factorization(parse_word("s1 s2"), [parse_word("s1"), parse_word("s2")])
    assert not validate_factorization(parse_word("s1 s2"), [parse_word("s2"), parse_word("s1")])
    assert validate_factorization(parse_word("D^2"), [parse_word(s) for s in ["s1", "s2"] * 3])
    assert not validate_factorization(parse_word("s1^2"), [parse_word("s1 s2"), parse_word("s2^-1 s1")])


def test_is_band_agrees_with_conjugator_search_on_short_words():
    # all words of length <= 5 with exponent sum 1 (others are never bands)
    for w in reduced_words(5):
        if sum(1 if x > 0 else -1 for x in w) != 1:
            assert not is_band(Word(w))
            continue
        assert is_band(Word(w)) == is_band_bruteforce(w, max_conj=8), w


@settings(max_examples=100, deadline=None)
@given(artin_words(7), artin_words(6))
def test_is_band_is_conjugation_invariant(x, g):
    conj = Word(tuple(-y for y in reversed(g.letters)) + x.letters + g.letters)
    assert is_band(x) == is_band(conj)
    if is_band(x):
        assert exponent_sum(x) == 1
