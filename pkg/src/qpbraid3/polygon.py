"""
Right normal forms u_1 ... u_n D^-p and the labelled polygon of a 3-braid.

Every braid that is not a power of D is uniquely ``u_1 ... u_n D^-p`` with
each u_i in {s1, s2, s1s2, s2s1} and the last letter of u_i equal to the
first letter of u_(i+1). Cycling (conjugating by u_1) rotates the blocks,
twisting the moved block by D-conjugation p times. A form is *closed* when
the junction u_n | u_1 also matches after that twist.

For a closed form the blocks sit on the vertices of a regular n-gon labelled
by exponent sums (1 or 2). An *antisymmetry* is a reflection whose axis
crosses two opposite sides, with label 2 on the four endpoints of those sides
and every other vertex labelled differently from its mirror image. For
braids of exponent sum 2 the number of antisymmetries is the number of
Hurwitz orbits of quasipositive factorizations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .garside import CanonicalBraid, conjugate, normalize
from .words import Word, exponent_sum, format_word

BLOCKS = {(1,), (2,), (1, 2), (2, 1)}


class GarsidePowerError(ValueError):
    """The braid is a power of D and has no right normal form."""


class ExcludedClass(ValueError):
    """No cyclic conjugate has a closed right normal form."""

    def __init__(self, label: str):
        super().__init__(f"conjugacy class {label} has no closed representative")
        self.label = label


def _swap(block: tuple[int, ...], times: int) -> tuple[int, ...]:
    return tuple(3 - x for x in block) if times % 2 else block


@dataclass(frozen=True)
class RightNormalForm:
    u: tuple[tuple[int, ...], ...]
    p: int

    def __post_init__(self):
        if not self.u:
            raise ValueError("a right normal form needs at least one block")
        for b in self.u:
            if b not in BLOCKS:
                raise ValueError(f"invalid block {b}")
        for a, b in zip(self.u, self.u[1:]):
            if a[-1] != b[0]:
                raise ValueError("adjacent blocks must share the junction letter")

    @property
    def n(self) -> int:
        return len(self.u)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.u)

    @property
    def closed(self) -> bool:
        return _swap((self.u[-1][-1],), self.p)[0] == self.u[0][0]

    def to_word(self) -> Word:
        letters = [x for b in self.u for x in b]
        if self.p >= 0:
            letters += [-1, -2, -1] * self.p
        else:
            letters += [1, 2, 1] * (-self.p)
        return Word(tuple(letters))

    def blocks(self) -> list[str]:
        return [format_word(b) for b in self.u]

    def __str__(self):
        d = f" · D^{-self.p}" if self.p else ""
        return " · ".join(self.blocks()) + d


@dataclass(frozen=True)
class PolygonLabeling:
    labels: tuple[int, ...]
    closure: bool = True

    @classmethod
    def from_form(cls, form: RightNormalForm) -> PolygonLabeling:
        return cls(form.labels, form.closed)


def _from_canonical(nf: CanonicalBraid) -> RightNormalForm:
    if not nf.factors:
        raise GarsidePowerError("powers of D have no right normal form")
    # D^t F = tau^t(F) D^t, and left-weighted junctions are exactly the
    # matching ones in B3.
    blocks = tuple(_swap(w, nf.inf) for w in nf.factor_words())
    return RightNormalForm(blocks, -nf.inf)


def right_normal_form(x: Word | CanonicalBraid) -> RightNormalForm:
    return _from_canonical(normalize(x))


def _excluded_label(e: int) -> str:
    if (e - 2) % 6 == 0:
        return f"s1 s2 D^{(e - 2) // 3}"
    if (e - 4) % 6 == 0:
        return f"s1 D^{(e - 1) // 3}"
    raise AssertionError(f"cycling failed for exponent sum {e}; not an excluded class")


def closed_representative(x: Word | CanonicalBraid) -> RightNormalForm:
    """A closed right normal form conjugate to ``x``, found by cycling."""
    nf = normalize(x)
    if not nf.factors:
        raise ExcludedClass(f"D^{nf.inf}")
    form = _from_canonical(nf)
    e = exponent_sum(form.to_word())
    steps = 0
    bound = 2 * form.n
    while not form.closed:
        if steps > bound:
            raise ExcludedClass(_excluded_label(e))
        u1 = normalize(Word(form.u[0]))
        nf = conjugate(nf, u1)
        if not nf.factors:
            raise ExcludedClass(f"D^{nf.inf}")
        form = _from_canonical(nf)
        bound = max(bound, 2 * form.n)
        steps += 1
    return form


@dataclass(frozen=True)
class Antisymmetry:
    axis: tuple[int, int]   # 1-based side indices; side i joins vertices i, i+1


def antisymmetries(labels) -> list[Antisymmetry]:
    """
    Axes through the midpoints of sides i and i + n/2 satisfying the
    antisymmetry conditions. Side i joins vertices i and i+1 (cyclically).
    """
    if isinstance(labels, PolygonLabeling):
        if not labels.closure:
            raise ValueError("antisymmetries need a closed labelling")
        labels = labels.labels
    labels = tuple(labels)
    n = len(labels)
    if n < 2 or n % 2:
        return []
    half = n // 2
    out = []
    for i in range(half):   # 0-based side i joins vertices i, i+1
        ends = {i, (i + 1) % n, (i + half) % n, (i + half + 1) % n}
        if any(labels[v] != 2 for v in ends):
            continue
        if all(labels[v] != labels[(2 * i + 1 - v) % n] for v in range(n) if v not in ends):
            out.append(Antisymmetry((i + 1, i + 1 + half)))
    return out


@dataclass
class E2Report:
    form: RightNormalForm | None
    axes: list[Antisymmetry] = field(default_factory=list)
    count: int = 0
    note: str = ""

    def to_json(self) -> dict:
        if self.form is None:
            return {"n": 0, "labels": [], "p": None, "antisymmetries": [], "count": self.count,
                    "note": self.note}
        out = {
            "n": self.form.n,
            "labels": list(self.form.labels),
            "p": self.form.p,
            "antisymmetries": [list(a.axis) for a in self.axes],
            "count": self.count,
        }
        if self.note:
            out["note"] = self.note
        return out


def analyse_e2(x: Word) -> E2Report:
    from .factorsearch import is_quasipositive

    if exponent_sum(x) != 2:
        raise ValueError("the orbit count formula needs exponent sum 2")
    if not is_quasipositive(x):
        return E2Report(None, [], 0, "not quasipositive")
    try:
        form = closed_representative(x)
    except ExcludedClass as exc:
        # the class of s1 s2: a positive braid, hence a single orbit
        return E2Report(None, [], 1, f"excluded class {exc.label}")
    if form.n <= 2:
        # e = 2 with n <= 2 forces the blocks (s_i, s_i) and p = 0: a
        # conjugate of the positive braid s1^2, which has a single orbit. The
        # digon itself has no antisymmetry, so it cannot be counted literally.
        assert form.p == 0, form
        return E2Report(form, [], 1, "degenerate polygon (conjugate of s1^2)")
    axes = antisymmetries(form.labels)
    return E2Report(form, axes, len(axes))


def orbit_count_e2(x: Word) -> int:
    return analyse_e2(x).count
