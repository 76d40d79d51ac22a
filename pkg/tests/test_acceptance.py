"""Acceptance suite: one test (or parametrized family) per acceptance criterion.

Every check is exact -- no tolerances anywhere.  Each passing case prints one
``ACCEPTANCE ... PASS`` line (visible with ``pytest -s`` or ``-rA``).

Honesty note: a handful of cases assert recorded reference values that exact
recomputation refutes (the solver result is confirmed by independent
brute-force oracles in this suite and in tests/test_derivations.py).  Those
assertions are kept exactly as recorded and FAIL deliberately; they are not
loosened, skipped or marked as expected failures.  The discrepancies are:

  * criterion 2, n in {6, 10}: the diagonal-shift coefficients c_t^{t+n/2}
    need not vanish (an explicit counterexample derivation exists);
  * criterion 3, n in {12, 20}: the closed-form dimension 2k-1 for odd k
    disagrees with the computed dimension 2k;
  * criterion 4, entry 3.1 over GF(3): recorded dimension 2, computed 6;
  * criterion 5, entry 4.2: recorded as zero, computed dims 4 (char 0)
    and 5 (char 2);
  * criterion 6, n=6 entries: recorded dims 2/4, computed 4/6;
  * criterion 7, GF(3): recorded dimension 4, computed 5;
  * criterion 9, trivial(3): recorded transformation-algebra dimension 3,
    computed 4 (the identity operator is a right multiplication here and
    is independent of the left multiplications).

See the ``notes`` fields in src/quandlib/data/*.json for per-entry detail.
"""

from functools import lru_cache
from itertools import product

import pytest

from quandlib.fields import GF, RATIONALS
from quandlib.linalg import Matrix, contains, span_from_vectors
from quandlib.algebra import AlgebraElement, basis_element, left_mult, multiply, right_mult
from quandlib.derivations import (
    derivation_space,
    dihedral_symmetry_report,
    flatten_matrix,
    predicted_dim_dihedral,
    verify_structure_relations,
)
from quandlib.lietransform import (
    commutator,
    flatten_operator,
    lie_transformation_algebra,
    lr_form_bound,
)
from quandlib.quandles import (
    alexander,
    catalog,
    catalog_lookup,
    conjugation,
    cyclic_group_table,
    dihedral,
    trivial,
)
from quandlib.algebra import augmentation_ideal, jx_ideal
from quandlib.linalg import span_sum
from quandlib.tables import compare_entry, load_entries
from quandlib.derivations import central_translation

Q = RATIONALS


@lru_cache(maxsize=None)
def _dihedral_der_q(n):
    return derivation_space(dihedral(n), Q)


@lru_cache(maxsize=None)
def _table_entry(label):
    for e in load_entries():
        if e.label == label:
            return e
    raise KeyError(label)


def _ok(cid, text):
    print(f"ACCEPTANCE {cid}: PASS - {text}")


# ---------------------------------------------------------------------------
# 1. dihedral triviality in odd order


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_c1_dihedral_odd_trivial(n):
    assert _dihedral_der_q(n).dim == 0
    _ok("1", f"dihedral({n}) over Q has no nonzero derivations")


# ---------------------------------------------------------------------------
# 2. dihedral coefficient symmetries


@pytest.mark.parametrize("n", [8, 12, 16])
def test_c2_symmetries_multiple_of_four(n):
    der = _dihedral_der_q(n)
    assert der.dim > 0
    for m in der.basis:
        rep = dihedral_symmetry_report(m, n)
        for name in ("reflection", "half_shift_sign", "half_shift_period"):
            check = rep.checks[name]
            assert check.applicable and check.holds, (n, name, check.counterexample)
    _ok("2", f"dihedral({n}) basis satisfies all multiple-of-four symmetries exactly")


@pytest.mark.parametrize("n", [6, 10])
def test_c2_symmetries_twice_odd_sign(n):
    der = _dihedral_der_q(n)
    assert der.dim > 0
    for m in der.basis:
        rep = dihedral_symmetry_report(m, n)
        check = rep.checks["half_shift_sign_twice_odd"]
        assert check.applicable and check.holds, (n, check.counterexample)
    _ok("2", f"dihedral({n}) basis satisfies the half-shift sign relation exactly")


@pytest.mark.parametrize("n", [6, 10])
def test_c2_symmetries_twice_odd_diagonal_zero(n):
    # Recorded relation c_t^{t+n/2} = 0.  Exact recomputation refutes it:
    # e_t -> e_t - e_{t+n/2} on even t is a derivation (see
    # test_derivations.test_half_diagonal_derivation_exists_for_twice_odd),
    # so this assertion fails deliberately.
    der = _dihedral_der_q(n)
    for m in der.basis:
        rep = dihedral_symmetry_report(m, n)
        check = rep.checks["diagonal_shift_zero"]
        assert check.applicable and check.holds, (n, check.counterexample)
    _ok("2", f"dihedral({n}) basis has vanishing diagonal-shift coefficients")


# ---------------------------------------------------------------------------
# 3. dimension of the dihedral derivation algebra


@pytest.mark.parametrize("n,expected,table_label", [
    (8, 4, "dihedral-4k/k2"),
    (16, 8, "dihedral-4k/k4"),
    (24, 12, "dihedral-4k/k6"),
    (12, 5, None),   # recorded closed form 2k-1; computed dimension is 6
    (20, 9, None),   # recorded closed form 2k-1; computed dimension is 10
])
def test_c3_dimension_formula(n, expected, table_label):
    if table_label is not None:
        assert _table_entry(table_label).recorded_dim == expected
    assert _dihedral_der_q(n).dim == expected
    _ok("3", f"dihedral({n}) over Q has derivation dimension {expected}")


def test_c3_n4_formula_vs_solver():
    """For n=4 the solver dimension and the closed-form value are recorded
    side by side; only agreement with the order-4 table entry (two free
    parameters) is asserted, and the formula discrepancy is flagged."""
    solver_dim = _dihedral_der_q(4).dim
    prediction = predicted_dim_dihedral(4)
    print(f"n=4 record: solver dim = {solver_dim}, closed-form value = {prediction.dim}")
    assert _table_entry("order4-char0/4.6").recorded_dim == 2
    assert solver_dim == 2
    assert prediction.check_against_solver
    assert prediction.dim != solver_dim  # the flagged discrepancy
    _ok("3", "n=4 solver dimension 2 agrees with the order-4 table; formula value 1 flagged")


# ---------------------------------------------------------------------------
# 4. order-3 table entries


@pytest.mark.parametrize("label,field_name,expected_dim", [
    ("3.1", "Q", 6),
    ("3.1", "GF(3)", 2),   # recorded value; computed dimension is 6
    ("3.2", "Q", 1),
    ("3.2", "GF(3)", 1),
    ("3.3", "Q", 0),
    ("3.3", "GF(3)", 2),
])
def test_c4_order3_tables(label, field_name, expected_dim):
    result = compare_entry(_table_entry(f"order3/{label}/{field_name}"))
    assert result.recorded_dim == expected_dim
    assert result.solver_dim == expected_dim, (label, field_name, result.solver_dim)
    assert result.spans_match
    _ok("4", f"order-3 entry {label} over {field_name}: dim {expected_dim}, spans equal")


# ---------------------------------------------------------------------------
# 5. order-4 table entries


_C5_CHAR0 = dict(zip([f"4.{i}" for i in range(1, 8)], (12, 0, 2, 0, 4, 2, 0)))
_C5_CHAR2 = dict(zip([f"4.{i}" for i in range(1, 8)], (12, 0, 2, 0, 6, 4, 4)))


@pytest.mark.parametrize("label,field_name,expected_dim",
                         [(l, "Q", d) for l, d in _C5_CHAR0.items()]
                         + [(l, "GF(2)", d) for l, d in _C5_CHAR2.items()])
def test_c5_order4_tables(label, field_name, expected_dim):
    group = "order4-char0" if field_name == "Q" else "order4-char2"
    result = compare_entry(_table_entry(f"{group}/{label}"))
    assert result.recorded_dim == expected_dim
    assert result.solver_dim == expected_dim, (label, field_name, result.solver_dim)
    assert result.spans_match
    _ok("5", f"order-4 entry {label} over {field_name}: dim {expected_dim}, spans equal")


# ---------------------------------------------------------------------------
# 6. dihedral quandles in positive characteristic


@pytest.mark.parametrize("n,p,expected_dim", [
    (3, 3, 2),
    (4, 2, 4),
    (5, 5, 2),
    (5, 2, 0),
    (5, 3, 0),
    (6, 2, 2),   # recorded value; computed dimension is 4
    (6, 3, 4),   # recorded value; computed dimension is 6
])
def test_c6_dihedral_positive_characteristic(n, p, expected_dim):
    result = compare_entry(_table_entry(f"dihedral-poschar/n{n}-GF({p})"))
    assert result.recorded_dim == expected_dim
    assert result.solver_dim == expected_dim, (n, p, result.solver_dim)
    assert result.spans_match
    _ok("6", f"dihedral({n}) over GF({p}): dim {expected_dim}, spans equal")


# ---------------------------------------------------------------------------
# 7. the conjugation quandle of the symmetric group on three letters


@pytest.mark.parametrize("field_name,expected_dim", [
    ("Q", 0),
    ("GF(2)", 0),
    ("GF(3)", 4),   # recorded value; computed dimension is 5
])
def test_c7_s3_conjugation(field_name, expected_dim):
    result = compare_entry(_table_entry(f"s3-conjugation/{field_name}"))
    assert result.recorded_dim == expected_dim
    assert result.solver_dim == expected_dim, (field_name, result.solver_dim)
    assert result.spans_match
    _ok("7", f"S3 conjugation over {field_name}: dim {expected_dim}, spans equal")


# ---------------------------------------------------------------------------
# 8. brute-force oracle over GF(2)


def _leibniz_holds(D, q, f):
    n = q.n
    for x in range(n):
        for y in range(n):
            lhs = D.col(q.table[x][y])
            left = multiply(AlgebraElement(f, D.col(x)), basis_element(f, n, y), q)
            right = multiply(basis_element(f, n, x), AlgebraElement(f, D.col(y)), q)
            for z in range(n):
                if lhs[z] != f.add(left.coeffs[z], right.coeffs[z]):
                    return False
    return True


@pytest.mark.parametrize("label", ["3.1", "3.2", "3.3"])
def test_c8_exhaustive_gf2_oracle(label):
    q = catalog_lookup(label)
    f = GF(2)
    count = sum(
        1 for ents in product(range(2), repeat=9) if _leibniz_holds(Matrix(f, 3, 3, ents), q, f)
    )
    dim = derivation_space(q, f).dim
    assert count == 2 ** dim
    _ok("8", f"catalog {label} over GF(2): 2^9 enumeration counts 2^{dim} Leibniz maps")


# ---------------------------------------------------------------------------
# 9. Lie transformation algebras of the order-3 quandles


def test_c9_trivial3_dimension():
    # Recorded dimension 3.  The computed algebra also contains the identity
    # operator (every right multiplication is the identity here), which is
    # independent of the three projections, so recomputation gives 4 and
    # this assertion fails deliberately.
    t = lie_transformation_algebra(trivial(3), Q)
    print(f"trivial(3) transformation algebra: computed dim = {t.dim}")
    assert t.dim == 3
    _ok("9", "trivial(3) transformation algebra is 3-dimensional")


def test_c9_trivial3_bracket_structure():
    q = trivial(3)
    t = lie_transformation_algebra(q, Q)
    l = [left_mult(x, q, Q) for x in range(3)]
    for i in range(3):
        assert t.contains_operator(l[i])
        for j in range(3):
            assert commutator(l[i], l[j]) == l[i] - l[j]
    _ok("9", "trivial(3) brackets satisfy [L_i, L_j] = L_i - L_j")


def test_c9_catalog32_span_equality():
    q = catalog_lookup("3.2")
    t = lie_transformation_algebra(q, Q)
    proj = lambda i: Matrix(Q, 3, 3, tuple(
        Q.one() if u == i else Q.zero() for u in range(3) for x in range(3)))
    gens = [Matrix.identity(Q, 3), left_mult(0, q, Q), left_mult(1, q, Q),
            right_mult(2, q, Q), proj(0), proj(1), proj(2)]
    claimed = span_from_vectors(Q, 9, [flatten_operator(m) for m in gens])
    print(f"catalog 3.2: computed dim = {t.dim}, claimed-generator rank = {claimed.dim}")
    assert t.subspace == claimed
    _ok("9", f"catalog 3.2 transformation algebra equals the 7-generator span (rank {t.dim})")


def test_c9_dihedral3_span_equality():
    q = dihedral(3)
    t = lie_transformation_algebra(q, Q)
    gens = [Matrix.identity(Q, 3)] + [left_mult(x, q, Q) for x in range(3)]
    gens.append(commutator(gens[1], gens[2]))
    claimed = span_from_vectors(Q, 9, [flatten_operator(m) for m in gens])
    print(f"dihedral(3): computed dim = {t.dim}, claimed-generator rank = {claimed.dim}")
    assert t.subspace == claimed
    _ok("9", f"dihedral(3) transformation algebra equals the claimed span (rank {t.dim})")


# ---------------------------------------------------------------------------
# 10. property suites


def test_c10a_derivation_spaces_closed_under_commutator():
    cases = [(q, f) for q in catalog(3) + catalog(4) for f in (Q, GF(2))]
    cases += [(dihedral(n), Q) for n in (4, 6, 8)]
    for q, f in cases:
        der = derivation_space(q, f)
        for a in der.basis:
            for b in der.basis:
                assert contains(der.subspace, flatten_matrix(commutator(a, b)))
    _ok("10a", "derivation spaces are commutator-closed (Lie algebras)")


def test_c10b_structure_relation_iff_leibniz_membership():
    import random
    rng = random.Random(42)
    for q, f in [(dihedral(4), Q), (catalog_lookup("3.2"), Q), (catalog_lookup("4.5"), GF(2))]:
        der = derivation_space(q, f)
        n = q.n
        for _ in range(8):
            coeffs = [f.from_int(rng.randrange(-3, 4)) for _ in der.basis]
            m = Matrix.zeros(f, n, n)
            for c, b in zip(coeffs, der.basis):
                m = m + b.scale(c)
            assert verify_structure_relations(m, q).ok
        for _ in range(8):
            m = Matrix.from_rows(
                f, [[f.from_int(rng.randrange(-2, 3)) for _ in range(n)] for _ in range(n)])
            assert verify_structure_relations(m, q).ok == contains(
                der.subspace, flatten_matrix(m))
    _ok("10b", "structure-constant relations hold iff the map is in the solver kernel")


def test_c10c_left_right_multiplications_commute_for_affine():
    for n in range(3, 9):
        for a in range(1, n):
            try:
                q = alexander(n, a)
            except ValueError:
                continue
            for x in range(n):
                assert commutator(left_mult(x, q, Q), right_mult(x, q, Q)).is_zero
    _ok("10c", "[L_x, R_x] = 0 for affine quandles of order up to 8")


def test_c10d_transformation_algebra_inside_lr_span():
    for q in catalog(3) + catalog(4):
        assert lr_form_bound(q, Q).contains_transformation_algebra
    _ok("10d", "transformation algebras lie inside the product span for the catalog")


def test_c10e_jx_right_ideal_and_dihedral3_vanishing():
    for q in catalog(3) + catalog(4):
        jx = jx_ideal(q, Q)
        for vec in jx.vectors:
            for z in range(q.n):
                out = [Q.zero()] * q.n
                for x, v in enumerate(vec):
                    if v:
                        out[q.table[x][z]] = Q.add(out[q.table[x][z]], v)
                assert contains(jx, out)
        assert span_sum(jx, augmentation_ideal(q, Q)) == augmentation_ideal(q, Q)
    assert jx_ideal(dihedral(3), Q).dim == 0
    _ok("10e", "commutator ideals close on the right and vanish for dihedral(3)")


def test_c10f_translation_composition_law():
    for n in (2, 3, 4):
        g = cyclic_group_table(n)
        q = conjugation(g)
        for x in range(n):
            dx = central_translation(g, x, Q)
            assert verify_structure_relations(dx, q).ok
            for y in range(n):
                dy = central_translation(g, y, Q)
                dxy = central_translation(g, g[x][y], Q)
                assert (dy @ dx) == dx + dy - dxy
    _ok("10f", "central translations compose by D_y D_x = D_x + D_y - D_{xy}")
