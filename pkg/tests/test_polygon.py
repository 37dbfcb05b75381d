import itertools
import random

import pytest
from hypothesis import given, settings

from qpbraid3 import factorsearch as fs
from qpbraid3.garside import conjugate, equal, normalize
from qpbraid3.polygon import (
    Antisymmetry,
    ExcludedClass,
    GarsidePowerError,
    PolygonLabeling,
    RightNormalForm,
    analyse_e2,
    antisymmetries,
    closed_representative,
    orbit_count_e2,
    right_normal_form,
)
from qpbraid3.words import Word, exponent_sum, parse_word

from .conftest import artin_words, random_word
from .oracles import same_braid

EXAMPLE = parse_word("s1^2 s2^2 s1^2 s2^2 D^-2")


def test_right_normal_form_example():
    form = right_normal_form(EXAMPLE)
    assert form.p == 2
    assert form.labels == (1, 2, 2, 2, 1)
    assert same_braid(form.to_word().letters, EXAMPLE.letters)
    assert str(form) == "s1 · s1 s2 · s2 s1 · s1 s2 · s2 · D^-2"


def test_right_normal_form_small_cases():
    assert right_normal_form(parse_word("s1")) == RightNormalForm(((1,),), 0)
    assert right_normal_form(parse_word("s1 s2")) == RightNormalForm(((1, 2),), 0)
    assert right_normal_form(parse_word("s1^-1")).p == 1
    with pytest.raises(GarsidePowerError):
        right_normal_form(parse_word("D^3"))
    with pytest.raises(GarsidePowerError):
        right_normal_form(Word())


def test_invalid_forms_are_rejected():
    with pytest.raises(ValueError):
        RightNormalForm(((1, 2), (1,)), 0)        # junction letters differ
    with pytest.raises(ValueError):
        RightNormalForm(((1, 2, 1),), 0)          # D is not a block
    with pytest.raises(ValueError):
        RightNormalForm((), 0)


def rescan(word):
    """Cut a positive word into blocks at every non-matching spot (cut rule)."""
    blocks, cur = [], [word[0]]
    for x in word[1:]:
        if len(cur) == 2 or x == cur[-1]:
            blocks.append(tuple(cur))
            cur = [x]
        else:
            cur.append(x)
    blocks.append(tuple(cur))
    return tuple(blocks)


@settings(max_examples=300, deadline=None)
@given(artin_words(max_size=14))
def test_right_normal_form_round_trip_and_uniqueness(w):
    if not normalize(w).factors:
        return
    form = right_normal_form(w)
    assert same_braid(form.to_word().letters, w.letters)
    # cutting the positive part again gives back the same blocks
    positive = [x for b in form.u for x in b]
    assert rescan(positive) == form.u
    # any other word for the same braid gives the same form
    assert right_normal_form(w * parse_word("s1 s2 s1 s2^-1 s1^-1 s2^-1")) == form


def test_closed_representative_example():
    form = closed_representative(EXAMPLE)
    assert form.closed
    assert form.labels == (2, 2, 2, 2) and form.p == 2
    assert PolygonLabeling.from_form(form) == PolygonLabeling((2, 2, 2, 2), True)


def test_closed_representative_is_conjugate():
    rng = random.Random(11)
    for _ in range(300):
        x = random_word(rng, rng.randint(1, 12))
        try:
            form = closed_representative(x)
        except ExcludedClass:
            continue
        assert form.closed
        assert exponent_sum(form.to_word()) == exponent_sum(x)
        # same conjugacy class: some cyclic conjugate of the form's word equals a conjugate of x
        y = normalize(form.to_word())
        seen, frontier = {normalize(x)}, [normalize(x)]
        found = y in seen
        for _ in range(4 * len(x.letters) + 8):
            if found:
                break
            nxt = []
            for c in frontier:
                for g in (1, -1, 2, -2):
                    d = conjugate(c, normalize(Word((g,))))
                    if d not in seen:
                        seen.add(d)
                        nxt.append(d)
            frontier = nxt[:2000]
            found = y in seen
        assert found, x


def test_excluded_classes():
    cases = {"s1 s2": "s1 s2 D^0", "s2 s1 D^2": "s1 s2 D^2", "s1 D": "s1 D^1",
             "D^2": "D^2", "s1 s2 D^-2": "s1 s2 D^-2", "s1^-2 s2^-1": "D^-1"}
    for word, label in cases.items():
        with pytest.raises(ExcludedClass) as info:
            closed_representative(parse_word(word))
        assert info.value.label == label, word


def test_antisymmetry_examples():
    assert antisymmetries((2, 2, 2, 2)) == [Antisymmetry((1, 3)), Antisymmetry((2, 4))]
    assert antisymmetries((1, 2, 2, 2, 2, 2)) == [Antisymmetry((2, 5))]
    assert antisymmetries((1, 2, 2, 1, 2, 2)) == []       # vertices 1 and 4 are mirror images
    assert antisymmetries((2, 2, 2)) == []
    assert antisymmetries((1, 1)) == []
    assert antisymmetries((1, 2, 2, 2, 1, 2)) == []
    with pytest.raises(ValueError):
        antisymmetries(PolygonLabeling((2, 2), False))


def brute_antisymmetries(labels):
    n = len(labels)
    if n % 2:
        return 0
    count = 0
    for i in range(n // 2):
        refl = {v: (2 * i + 1 - v) % n for v in range(n)}
        ends = {i, (i + 1) % n, (i + n // 2) % n, (i + n // 2 + 1) % n}
        if all(labels[v] == 2 for v in ends) and all(labels[v] != labels[refl[v]] for v in set(range(n)) - ends):
            count += 1
    return count


def test_antisymmetries_are_rotation_invariant_in_number():
    for n in range(2, 11, 2):
        for lab in itertools.product((1, 2), repeat=n):
            k = len(antisymmetries(lab))
            assert k == brute_antisymmetries(lab)
            assert len(antisymmetries(lab[1:] + lab[:1])) == k
            assert len(antisymmetries(lab[::-1])) == k


def test_count_is_independent_of_further_cycling():
    rng = random.Random(12)
    checked = 0
    while checked < 60:
        W = Word(tuple(rng.choice((1, 2)) for _ in range(5)))
        x = W * parse_word("D^-1")
        try:
            form = closed_representative(x)
        except ExcludedClass:
            continue
        k = len(antisymmetries(form.labels))
        nf = normalize(form.to_word())
        for _ in range(form.n):
            nf = conjugate(nf, normalize(Word(right_normal_form(nf).u[0])))
            again = right_normal_form(nf)
            if again.closed:
                assert len(antisymmetries(again.labels)) == k
        checked += 1


def test_orbit_count_e2_examples():
    assert orbit_count_e2(EXAMPLE) == 2
    assert orbit_count_e2(parse_word("s1 s2")) == 1
    assert orbit_count_e2(parse_word("s1^2")) == 1
    assert closed_representative(parse_word("s1")).labels == (1,)
    assert not fs.is_quasipositive(parse_word("s1^3 s2^-1"))
    assert orbit_count_e2(parse_word("s1^3 s2^-1")) == 0
    assert analyse_e2(parse_word("s1^2")).note.startswith("degenerate")
    with pytest.raises(ValueError):
        orbit_count_e2(parse_word("s1"))


def test_orbit_count_e2_agrees_with_factor_search():
    rng = random.Random(13)
    for _ in range(80):
        p = rng.randint(0, 2)
        x = Word(tuple(rng.choice((1, 2)) for _ in range(2 + 3 * p))) * Word((-1, -2, -1) * p)
        assert orbit_count_e2(x) == fs.count_orbits(x), x
