"""
Hurwitz moves and equivalence witnesses.

S_i replaces (.., a, b, ..) at positions i, i+1 by (.., a b a^-1, a, ..).
Two factorizations are equivalent when a sequence of such moves carries one
to the other; the search returns that sequence so it can be replayed.
"""

from qpbraid3 import hurwitz as hw

f = hw.Factorization.from_words(["s1", "s2", "s1"])
g = hw.Factorization.from_words(["s2", "s1", "s2"])

print("f =", f)
for i in (1, 2):
    print(f"S{i} f =", hw.sigma_move(f, i), f"   S{i}^-1 f =", hw.sigma_move(f, i, -1))

ok, moves = hw.equivalent(f, g)
print("\nf ~ g:", ok, " witness:", " ".join(map(str, moves)))
print("replayed:", hw.apply_moves(f, moves), "== g:", hw.apply_moves(f, moves).key == g.key)

orb = hw.orbit(f)
print(f"\nthe orbit of f is finite (its product is D) with {orb.size} members:")
for m in orb.members:
    print("  ", m, "  via", " ".join(map(str, orb.witness(m))) or "(start)")
