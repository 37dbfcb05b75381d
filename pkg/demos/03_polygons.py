"""
Counting orbits for exponent sum 2 with labelled polygons.

Cycle the braid until its right normal form u_1 ... u_n D^-p closes up, put
the blocks' lengths (1 or 2) on the vertices of an n-gon, and count the
antisymmetric reflections. For exponent sum 2 that number is the number of
orbits, which we compare with the factor search.
"""

import random

from qpbraid3 import factorsearch as fs
from qpbraid3.polygon import analyse_e2, closed_representative, right_normal_form
from qpbraid3.words import Word, parse_word

x = parse_word("s1^2 s2^2 s1^2 s2^2 D^-2")
print("right normal form:  ", right_normal_form(x))
form = closed_representative(x)
print("closed representative:", form, " labels", list(form.labels))
rep = analyse_e2(x)
print("antisymmetry axes:", [a.axis for a in rep.axes], " -> orbits:", rep.count)

print("\nrandom braids W D^-p with exponent sum 2:")
rng = random.Random(0)
for _ in range(8):
    p = rng.randint(1, 2)
    y = Word(tuple(rng.choice((1, 2)) for _ in range(2 + 3 * p))) * Word((-1, -2, -1) * p)
    r = analyse_e2(y)
    print(f"  {str(y):40s} polygon count {r.count}  search count {fs.count_orbits(y)}"
          + (f"  [{r.note}]" if r.note else ""))
