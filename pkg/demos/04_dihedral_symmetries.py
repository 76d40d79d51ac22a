"""Coefficient symmetries and block shapes of dihedral derivations.

The solver output is the ground truth; the recorded symmetry relations and
the closed-form dimension count are confronted with it, which is how the
failure of the diagonal-shift relation for orders 2 mod 4 and of the odd-k
closed form shows up.
"""

from quandlib import (
    RATIONALS,
    block_decomposition,
    derivation_space,
    dihedral,
    dihedral_symmetry_report,
    predicted_dim_dihedral,
)

Q = RATIONALS

print("== Symmetry report for dihedral(8) over Q ==")
der8 = derivation_space(dihedral(8), Q)
print("dimension:", der8.dim)
rep = dihedral_symmetry_report(der8.basis[0], 8)
for name, check in sorted(rep.checks.items()):
    state = "n/a" if not check.applicable else ("holds" if check.holds else f"fails at {check.counterexample}")
    print(f"  {name:28s} {state:10s} ({check.description})")

print("\n== Block shape for multiples of four ==")
blocks = block_decomposition(der8.basis[0], 8)
print("fits (P, -P; -P, P):", blocks.fits, " and P = (U, V; -V, U):", blocks.fits_uv)
fmt = lambda m: [[str(v) for v in row] for row in m.to_lists()]
print("U =", fmt(blocks.u_block))
print("V =", fmt(blocks.v_block))

print("\n== Orders 2 mod 4: the diagonal-shift relation fails ==")
der6 = derivation_space(dihedral(6), Q)
print("dihedral(6) dimension:", der6.dim)
for i, m in enumerate(der6.basis):
    checks = dihedral_symmetry_report(m, 6).checks
    print(f"  basis[{i}]: sign relation {checks['half_shift_sign_twice_odd'].holds}, "
          f"diagonal shift zero {checks['diagonal_shift_zero'].holds}")

print("\n== Closed-form dimension vs solver ==")
print(f"{'n':>4s} {'closed form':>12s} {'solver':>7s}")
for n in (3, 4, 5, 6, 8, 12, 16, 20, 24):
    pred = predicted_dim_dihedral(n)
    solver = derivation_space(dihedral(n), Q).dim
    shown = "-" if pred.dim is None else str(pred.dim)
    marker = "" if pred.dim in (None, solver) else "   <-- disagree"
    print(f"{n:4d} {shown:>12s} {solver:7d}{marker}")
