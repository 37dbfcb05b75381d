"""
A braid with two Hurwitz orbits of quasipositive factorizations.

x = s1^2 s2^2 s1^2 s2^2 D^-2 has exponent sum 2, so every quasipositive
factorization has two bands. Writing x = W D^-2 with W positive, deleting
two letters of W so that the rest equals D^2 yields a factorization; the
search below finds all of them and groups them into orbits.
"""

from qpbraid3 import factorsearch as fs
from qpbraid3 import hurwitz as hw
from qpbraid3.words import parse_word

x = parse_word("s1^2 s2^2 s1^2 s2^2 D^-2")
W, p = parse_word("s1^2 s2^2 s1^2 s2^2"), 2
print(f"x = {W} D^-{p}")
# positive_form(x) finds some such pair automatically (a longer W, larger p);
# any choice gives the same orbits.
print("automatic positive form: p =", fs.positive_form(x)[1], "\n")

candidates = fs.enumerate_index_sets(W, p)
print(f"{len(candidates)} minimal index sets:")
for I in candidates:
    print(f"  I = {list(I)}  ->  {fs.build_W_I(W, I)}")

reps = fs.representatives_from_positive(W, p)
assert [c.index_set for c in reps] == [c.index_set for c in fs.orbit_representatives(x)]
print(f"\n{len(reps)} orbits; representatives:")
for c in reps:
    print(f"  I = {list(c.index_set)}  {c.factorization}")

a, b = (c.factorization for c in reps)
print("\nequivalent?", hw.equivalent(a, b)[0])
print("why the orbits are infinite:", hw.infinite_orbit_reason(a))
