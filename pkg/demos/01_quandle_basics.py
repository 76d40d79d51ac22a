"""Tour of finite quandle construction and structural predicates."""

from quandlib import (
    AxiomViolation,
    S3_TABLE,
    catalog,
    check_axioms,
    conjugation,
    dihedral,
    props,
    trivial,
    validate,
)

print("== Building quandles ==")
d3 = dihedral(3)
print("dihedral(3) Cayley table (entry [x][y] = x ⊳ y):")
for row in d3.table:
    print("   ", row)

print("\ntrivial(4) rows are constant:", trivial(4).table[2])

print("\n== Validation ==")
bad = [[0, 2, 1], [1, 1, 0], [2, 0, 2]]
err = check_axioms(bad)
print("table", bad)
print("fails axiom", err.axiom, "at witness", err.witness)
try:
    validate([[1, 0], [0, 1]])
except AxiomViolation as exc:
    print("non-idempotent table rejected:", exc)

print("\n== Structural predicates ==")
for q, name in [(d3, "dihedral(3)"), (trivial(3), "trivial(3)")]:
    p = props(q)
    print(f"{name}: involutive={p.involutive} latin={p.latin} medial={p.medial} "
          f"connected={p.connected} orbits={p.orbits}")

print("\n== Conjugation quandle of the symmetric group on 3 letters ==")
s3q = conjugation(S3_TABLE)
print("multiplication table rows (0-indexed basis 1, y, y², x, yx, y²x):")
for row in s3q.table:
    print("   ", row)
print("orbit decomposition:", props(s3q).orbits)

print("\n== The catalog of small quandles ==")
for q in catalog(3) + catalog(4):
    print(f"{q.label}: {q.table}")
