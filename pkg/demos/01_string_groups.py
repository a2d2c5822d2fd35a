"""Tour of string-group arithmetic: normal forms, the degree and mult maps,
dualizing elements and the tubular classification.

Run:  python demos/01_string_groups.py
"""

from wpline import WeightSequence

# Every element of the group presented by p_1 x_1 = ... = p_t x_t has a
# unique normal form l*c + sum(l_i x_i) with 0 <= l_i < p_i.  Constructors
# normalize eagerly, so arbitrary integer data is fine.
L = WeightSequence((4, 4, 2))
e = L.normalize(2, (-3, -3, -1))
print("normalize 2c - 3z1 - 3z2 - z3 in L(4,4,2):", e, "=", e.pretty())

z1, z2, z3 = L.gens
print("defining relation: 4*z1 =", 4 * z1, " 2*z3 =", 2 * z3)

# The degree map sends the i-th generator to lcm(p)/p_i; its kernel is
# exactly the torsion subgroup.
print("\ndegrees of generators of L(4,4,2):", [g.degree() for g in L.gens])

# The dualizing element (t-2)c - sum(x_i) is torsion exactly in the four
# tubular types, where its order walks through 2, 3, 4, 6.
print("\nweight type   dualizing element   degree   order   tubular")
for ws in [(2, 2, 2, 2), (3, 3, 3), (4, 4, 2), (6, 3, 2), (2, 3, 7), (2, 2)]:
    G = WeightSequence(ws)
    w = G.dualizing_element()
    print("%-12s  %-18s  %6d   %5s   %s"
          % (G, w, w.degree(), w.order(), G.is_tubular()))

# mult reads max(l+1, 0) off the normal form; it will reappear as the
# dimension of the graded components of the coordinate algebra.
L6 = WeightSequence((6, 3, 2))
w = L6.dualizing_element()
print("\nmultiples of the dualizing element of L(6,3,2):")
for n in range(1, 7):
    m = n * w
    print("  %d*omega = %-10s  mult = %d" % (n, m, m.mult()))
