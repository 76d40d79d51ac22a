"""Solving for derivations: exact kernels of the Leibniz system.

A derivation satisfies D(a·b) = D(a)·b + a·D(b).  The solver builds the
n³ × n² coefficient system over the chosen field and echelonizes exactly;
no floating point, no tolerance.
"""

from itertools import product

from quandlib import (
    GF,
    RATIONALS,
    Matrix,
    catalog,
    derivation_space,
    dihedral,
    leibniz_system,
    trivial,
    verify_structure_relations,
)

Q = RATIONALS

print("== Dimensions across the catalog ==")
print(f"{'quandle':12s} {'over Q':>7s} {'GF(2)':>7s} {'GF(3)':>7s}")
for q in catalog(3) + catalog(4):
    dims = [derivation_space(q, f).dim for f in (Q, GF(2), GF(3))]
    print(f"{q.label:12s} {dims[0]:7d} {dims[1]:7d} {dims[2]:7d}")

print("\n== A basis in characteristic 3 for dihedral(3) ==")
for m in derivation_space(dihedral(3), GF(3)).basis:
    print("   ", m.to_lists())

print("\n== The system itself ==")
sys_matrix = leibniz_system(dihedral(3), Q)
print("dihedral(3) system shape:", sys_matrix.nrows, "x", sys_matrix.ncols)

print("\n== Cross-check against exhaustive enumeration over GF(2) ==")
q = trivial(3)
f = GF(2)
dim = derivation_space(q, f).dim
count = sum(
    1
    for ents in product(range(2), repeat=9)
    if verify_structure_relations(Matrix(f, 3, 3, ents), q).ok
)
print(f"trivial(3)/GF(2): solver dim {dim}; enumeration finds {count} = 2^{dim} maps")

print("\n== Structure-constant characterization ==")
m = Matrix.from_rows(Q, [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
check = verify_structure_relations(m, dihedral(4))
print("a non-derivation is rejected with witness triple:", check.witness)
