"""The quandle algebra: products, augmentation, and the two ideals."""

from quandlib import (
    GF,
    RATIONALS,
    augmentation,
    augmentation_ideal,
    basis_element,
    dihedral,
    element,
    jx_ideal,
    left_mult,
    multiply,
    right_mult,
    trivial,
)

Q = RATIONALS
q = dihedral(3)

print("== Products in k[X] for the dihedral quandle of order 3 ==")
e = lambda x: basis_element(Q, 3, x)
print("e0 · e1 =", multiply(e(0), e(1), q), " (since 2·1-0 = 2)")
a = e(0) + e(1)
print("(e0+e1) · e1 =", multiply(a, e(1), q))

print("\nThe product is not associative:")
lhs = multiply(multiply(e(0), e(1), q), e(2), q)
rhs = multiply(e(0), multiply(e(1), e(2), q), q)
print("  (e0 e1) e2 =", lhs, "  but  e0 (e1 e2) =", rhs)

print("\n== Augmentation ==")
v = element(Q, [2, -1, 0])
print("ε(2e0 - e1) =", augmentation(v))
print("ε is multiplicative: ε(v·v) =", augmentation(multiply(v, v, q)))
ideal = augmentation_ideal(q, Q)
print("augmentation ideal has dimension", ideal.dim, "with canonical basis:")
for row in ideal.vectors:
    print("   ", [str(v) for v in row])

print("\n== The right ideal generated by e_{x⊳y} - e_{y⊳x} ==")
print("dihedral(3): x⊳y = y⊳x throughout, so the ideal is zero:",
      jx_ideal(q, Q).dim == 0)
t4 = trivial(4)
jx = jx_ideal(t4, Q)
print(f"trivial(4): the ideal equals the augmentation ideal "
      f"(dim {jx.dim} = {augmentation_ideal(t4, Q).dim})")
print("over GF(2):", jx_ideal(t4, GF(2)).dim, "dimensional")

print("\n== Multiplication operators ==")
print("L_0 of dihedral(3) permutes e1 and e2:")
for row in left_mult(0, q, Q).to_lists():
    print("   ", [str(v) for v in row])
print("R_x of the trivial quandle is always the identity:",
      right_mult(1, t4, Q) == right_mult(2, t4, Q))
