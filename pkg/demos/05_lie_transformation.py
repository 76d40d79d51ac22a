"""Lie transformation algebras, inner derivations, and operator product spans."""

from quandlib import (
    RATIONALS,
    alexander,
    alexander_canonical_form,
    catalog_lookup,
    commutator,
    dihedral,
    inner_derivations,
    left_mult,
    lie_transformation_algebra,
    lr_form_bound,
    right_mult,
    trivial,
)

Q = RATIONALS

print("== Transformation algebras of the order-3 quandles ==")
for q, name in [
    (trivial(3), "trivial(3)"),
    (catalog_lookup("3.2"), "catalog 3.2"),
    (dihedral(3), "dihedral(3)"),
]:
    t = lie_transformation_algebra(q, Q)
    print(f"{name:12s} dim {t.dim}   generators that grew the span: {t.generator_log}")

print("\n== Brackets in the trivial quandle ==")
q = trivial(3)
l0, l1 = left_mult(0, q, Q), left_mult(1, q, Q)
print("[L0, L1] == L0 - L1:", commutator(l0, l1) == l0 - l1)

print("\n== Inner versus outer derivations ==")
for q, name in [(trivial(3), "trivial(3)"), (dihedral(3), "dihedral(3)"),
                (catalog_lookup("4.5"), "catalog 4.5")]:
    r = inner_derivations(q, Q)
    print(f"{name:12s} derivations {r.derivation_dim}, inner {r.inner_dim}, "
          f"outer {r.outer_dim} (transformation algebra dim {r.transformation_dim})")

print("\n== Left-word times right-word spans ==")
for q, name in [(dihedral(3), "dihedral(3)"), (catalog_lookup("4.3"), "catalog 4.3")]:
    r = lr_form_bound(q, Q)
    verdict = "strictly larger than" if r.strict else "equal to"
    print(f"{name:12s} product span dim {r.lr_dim}, {verdict} the transformation algebra")

print("\n== Affine quandles ==")
for q, name in [(dihedral(5), "dihedral(5)"), (alexander(5, 2), "affine(5, α=2)")]:
    rep = alexander_canonical_form(q, Q)
    print(f"{name:14s} every transformation-algebra element fits the "
          f"L·L0^a·R0^b + R·L0^a·R0^b form: {rep.all_contained}")
    for x in range(q.n):
        assert commutator(left_mult(x, q, Q), right_mult(x, q, Q)).is_zero
    print(f"{'':14s} [L_x, R_x] = 0 for every x: True")
