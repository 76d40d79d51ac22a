"""Derivations of quandle algebras.

A derivation is a linear map D with D(a·b) = D(a)·b + a·D(b).  On the basis
this is one linear condition per triple (x, y, z), giving an n³ × n² system
whose kernel, reshaped, is the space of derivation matrices.  The unknowns
are the matrix entries D[u][t] (the coefficient of e_u in D(e_t)), flattened
row-major: unknown index = u*n + t.  The solver is the ground truth here;
the dihedral symmetry relations and the closed-form dimension counts are
checked against it, never used to shortcut it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .fields import FieldSpec, Scalar
from .linalg import Matrix, SubspaceBasis, _Echelon, _nullspace_from_echelon
from .quandles import Quandle, _check_group


# ---------------------------------------------------------------------------
# the Leibniz system


def _left_preimages(q: Quandle) -> list[list[list[int]]]:
    """pre[x][z] = all w with x ⊳ w = z (possibly empty, rows need not be bijective)."""
    pre = [[[] for _ in range(q.n)] for _ in range(q.n)]
    for x in range(q.n):
        for w in range(q.n):
            pre[x][q.table[x][w]].append(w)
    return pre


def _leibniz_sparse_rows(q: Quandle) -> Iterator[dict[int, int]]:
    """Integer coefficient rows of the Leibniz system, one per (x, y, z).

    Row (x, y, z) encodes the coefficient of e_z in
    D(e_{x⊳y}) - D(e_x)·e_y - e_x·D(e_y).
    """
    n = q.n
    table = q.table
    colinv = [q.column_perm_inverse(y) for y in range(n)]
    pre = _left_preimages(q)
    for x in range(n):
        row_x = table[x]
        for y in range(n):
            xy = row_x[y]
            inv_y = colinv[y]
            for z in range(n):
                row: dict[int, int] = {}
                row[z * n + xy] = row.get(z * n + xy, 0) + 1
                zhat = inv_y[z]
                key = zhat * n + x
                row[key] = row.get(key, 0) - 1
                for w in pre[x][z]:
                    key = w * n + y
                    row[key] = row.get(key, 0) - 1
                yield {k: v for k, v in row.items() if v}


def leibniz_system(q: Quandle, f: FieldSpec) -> Matrix:
    """The dense n³ × n² Leibniz system, rows in (x, y, z) lexicographic order."""
    n = q.n
    zero = f.zero()
    ents: list[Scalar] = []
    for row in _leibniz_sparse_rows(q):
        dense = [zero] * (n * n)
        for k, v in row.items():
            dense[k] = f.from_int(v)
        ents.extend(dense)
    return Matrix(f, n ** 3, n * n, tuple(ents))


# ---------------------------------------------------------------------------
# the derivation space


@dataclass(frozen=True)
class DerivationBasis:
    """Canonical basis of the derivation Lie algebra of k[X].

    ``subspace`` holds the echelonized kernel of the Leibniz system in the
    row-major flattening; ``basis`` holds the same vectors reshaped to
    matrices.
    """

    quandle: Quandle
    field: FieldSpec
    subspace: SubspaceBasis
    basis: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return self.subspace.dim


def matrix_from_flat(f: FieldSpec, n: int, vec: Sequence[Scalar]) -> Matrix:
    """Reshape a row-major flattened coefficient vector into a map matrix."""
    return Matrix(f, n, n, tuple(vec))


def flatten_matrix(m: Matrix) -> tuple[Scalar, ...]:
    """Row-major flattening; inverse of matrix_from_flat."""
    return m.entries


def derivation_space(q: Quandle, f: FieldSpec) -> DerivationBasis:
    n = q.n
    ech = _Echelon(f, n * n)
    seen: set[tuple[tuple[int, int], ...]] = set()
    for row in _leibniz_sparse_rows(q):
        if not row:
            continue
        key = tuple(sorted(row.items()))
        if key in seen:
            continue
        seen.add(key)
        if f.p is not None:
            row = {k: v % f.p for k, v in row.items()}
            row = {k: v for k, v in row.items() if v}
            if not row:
                continue
        ech.insert(row)
    kernel = _nullspace_from_echelon(f, n * n, ech)
    mats = tuple(matrix_from_flat(f, n, vec) for vec in kernel.vectors)
    return DerivationBasis(quandle=q, field=f, subspace=kernel, basis=mats)


# ---------------------------------------------------------------------------
# structure-constant characterization


@dataclass(frozen=True)
class StructureCheck:
    ok: bool
    witness: tuple[int, int, int] | None


def verify_structure_relations(D: Matrix, q: Quandle) -> StructureCheck:
    """Check c_{x⊳y}^z = c_x^ẑ + sum over w in x⁻¹(z) of c_y^w for all x, y, z.

    Here ẑ is the unique element with ẑ ⊳ y = z and x⁻¹(z) = {w : x ⊳ w = z}.
    Agrees exactly with membership in the derivation space.
    """
    n = q.n
    if D.nrows != n or D.ncols != n:
        raise ValueError("matrix order does not match quandle order")
    f = D.field
    colinv = [q.column_perm_inverse(y) for y in range(n)]
    pre = _left_preimages(q)
    for x in range(n):
        for y in range(n):
            xy = q.table[x][y]
            inv_y = colinv[y]
            for z in range(n):
                lhs = D.entry(z, xy)
                rhs = D.entry(inv_y[z], x)
                for w in pre[x][z]:
                    rhs = f.add(rhs, D.entry(w, y))
                if lhs != rhs:
                    return StructureCheck(False, (x, y, z))
    return StructureCheck(True, None)


# ---------------------------------------------------------------------------
# dihedral symmetry relations


@dataclass(frozen=True)
class RelationCheck:
    applicable: bool
    holds: bool | None
    counterexample: tuple[int, ...] | None
    description: str


@dataclass(frozen=True)
class SymmetryReport:
    n: int
    checks: dict[str, RelationCheck]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks.values() if c.applicable)


def _na(description: str) -> RelationCheck:
    return RelationCheck(False, None, None, description)


def dihedral_symmetry_report(D: Matrix, n: int) -> SymmetryReport:
    """Evaluate the dihedral coefficient symmetries on a map matrix.

    Coefficient convention: c_t^x is the entry at row x, column t, indices
    mod n.  Relations whose hypotheses do not fit this n are marked not
    applicable.
    """
    if D.nrows != n or D.ncols != n:
        raise ValueError("matrix order mismatch")

    def c(t: int, x: int) -> Scalar:
        return D.entry(x % n, t % n)

    f = D.field
    checks: dict[str, RelationCheck] = {}

    def scan(name: str, description: str, predicate) -> None:
        counter = None
        for args in predicate():
            counter = args
            break
        checks[name] = RelationCheck(True, counter is None, counter, description)

    even = n % 2 == 0
    quad = n % 4 == 0

    if even:
        def reflection():
            for t in range(n):
                for d in range(n):
                    for x in range(n):
                        if c(t + 2 * d, x) != c(t, 2 * t + 2 * d - x):
                            yield (t, d, x)
        scan("reflection", "c_{t+2d}^x = c_t^{2t+2d-x}", reflection)
    else:
        checks["reflection"] = _na("c_{t+2d}^x = c_t^{2t+2d-x} (even order only)")

    if quad:
        k = n // 4

        def half_sign():
            for t in range(n):
                for x in range(n):
                    if c(t, x) != f.neg(c(t, x + 2 * k)):
                        yield (t, x)
        scan("half_shift_sign", f"c_t^x = -c_t^(x+{2 * k})", half_sign)

        def half_period():
            for t in range(n):
                for x in range(n):
                    if c(t, x) != c(t + 2 * k, x + 2 * k):
                        yield (t, x)
        scan("half_shift_period", f"c_t^x = c_(t+{2 * k})^(x+{2 * k})", half_period)

        if k % 2 == 0:
            def quarter_period():
                for t in range(n):
                    for x in range(n):
                        if c(t, x) != c(t + k, x + k):
                            yield (t, x)
            scan("quarter_shift_period", f"c_t^x = c_(t+{k})^(x+{k})", quarter_period)
            checks["near_quarter_shift_period"] = _na("c_t^x = c_(t+k-1)^(x+k-1) (odd quarter only)")
        else:
            def near_quarter():
                for t in range(n):
                    for x in range(n):
                        if c(t, x) != c(t + k - 1, x + k - 1):
                            yield (t, x)
            scan("near_quarter_shift_period", f"c_t^x = c_(t+{k - 1})^(x+{k - 1})", near_quarter)
            checks["quarter_shift_period"] = _na("c_t^x = c_(t+k)^(x+k) (even quarter only)")
        checks["half_shift_sign_twice_odd"] = _na("c_t^x = -c_t^(x+k) (order 2 mod 4 only)")
    elif even:
        k = n // 2

        def case3_sign():
            for t in range(n):
                for x in range(n):
                    if c(t, x) != f.neg(c(t, x + k)):
                        yield (t, x)
        scan("half_shift_sign_twice_odd", f"c_t^x = -c_t^(x+{k})", case3_sign)
        checks["half_shift_sign"] = _na("c_t^x = -c_t^(x+2k) (order 0 mod 4 only)")
        checks["half_shift_period"] = _na("c_t^x = c_(t+2k)^(x+2k) (order 0 mod 4 only)")
        checks["quarter_shift_period"] = _na("order 0 mod 4 only")
        checks["near_quarter_shift_period"] = _na("order 0 mod 4 only")
    else:
        for name in ("half_shift_sign", "half_shift_period", "half_shift_sign_twice_odd",
                     "quarter_shift_period", "near_quarter_shift_period"):
            checks[name] = _na("even order only")

    if even:
        k = n // 4 if quad else n // 2

        def diag_zero():
            for t in range(n):
                if c(t, t + k):
                    yield (t,)
        scan("diagonal_shift_zero", f"c_t^(t+{k}) = 0", diag_zero)
    else:
        checks["diagonal_shift_zero"] = _na("even order only")

    return SymmetryReport(n=n, checks=checks)


# ---------------------------------------------------------------------------
# block shape of dihedral derivations


@dataclass(frozen=True)
class BlockReport:
    """Block structure of a candidate derivation matrix of even dihedral order.

    For n = 4k: ``fits`` says whether D = (P, -P; -P, P); when the quarter k
    is even, ``fits_uv`` additionally reports P = (U, V; -V, U).  For
    n = 2k with k odd, ``fits`` reports the row relation c_t^{x+k} = -c_t^x
    and ``top_half`` carries the upper half of the matrix.
    """

    n: int
    form: str
    fits: bool
    p_block: Matrix | None = None
    fits_uv: bool | None = None
    u_block: Matrix | None = None
    v_block: Matrix | None = None
    top_half: Matrix | None = None


def _submatrix(D: Matrix, r0: int, c0: int, size_r: int, size_c: int) -> Matrix:
    ents = tuple(
        D.entry(r0 + i, c0 + j) for i in range(size_r) for j in range(size_c)
    )
    return Matrix(D.field, size_r, size_c, ents)


def block_decomposition(D: Matrix, n: int) -> BlockReport:
    if n % 2 != 0:
        raise ValueError("block decomposition needs even order")
    if D.nrows != n or D.ncols != n:
        raise ValueError("matrix order mismatch")
    f = D.field
    h = n // 2
    if n % 4 == 0:
        p = _submatrix(D, 0, 0, h, h)
        fits = (
            _submatrix(D, 0, h, h, h) == -p
            and _submatrix(D, h, 0, h, h) == -p
            and _submatrix(D, h, h, h, h) == p
        )
        k = n // 4
        fits_uv = None
        u = v = None
        if k % 2 == 0:
            u = _submatrix(D, 0, 0, k, k)
            v = _submatrix(D, 0, k, k, k)
            fits_uv = fits and (
                _submatrix(D, k, 0, k, k) == -v and _submatrix(D, k, k, k, k) == u
            )
        return BlockReport(n=n, form="quadrant", fits=fits, p_block=p,
                           fits_uv=fits_uv, u_block=u, v_block=v)
    fits = all(
        D.entry(x + h, t) == f.neg(D.entry(x, t)) for x in range(h) for t in range(n)
    )
    return BlockReport(n=n, form="half_rows", fits=fits,
                       top_half=_submatrix(D, 0, 0, h, n))


# ---------------------------------------------------------------------------
# dimension prediction for dihedral quandles in characteristic zero


@dataclass(frozen=True)
class DimPrediction:
    """Closed-form dimension claim; always compare against the solver.

    ``dim`` is None when no closed form is available (n = 2 mod 4).  The
    multiple-of-four formula is a recorded claim, not a solver shortcut;
    ``check_against_solver`` flags that callers must confront it with the
    computed dimension.
    """

    n: int
    dim: int | None
    rule: str
    check_against_solver: bool


def predicted_dim_dihedral(n: int) -> DimPrediction:
    if n < 1:
        raise ValueError("order must be positive")
    if n % 2 == 1:
        return DimPrediction(n, 0, "odd_order_trivial", False)
    if n % 4 == 0:
        k = n // 4
        dim = 2 * k if k % 2 == 0 else 2 * k - 1
        return DimPrediction(n, dim, "multiple_of_four_formula", True)
    return DimPrediction(n, None, "no_closed_form", True)


# ---------------------------------------------------------------------------
# explicit derivations on conjugation quandles


def central_translation(group_table: Sequence[Sequence[int]], x: int, f: FieldSpec) -> Matrix:
    """The map e_y ↦ e_y - e_{yx} for a central group element x.

    A derivation of the conjugation-quandle algebra of the group; centrality
    is checked.
    """
    _check_group(group_table)
    n = len(group_table)
    if not (0 <= x < n):
        raise IndexError("element out of range")
    for g in range(n):
        if group_table[x][g] != group_table[g][x]:
            raise ValueError(f"element {x} is not central (fails against {g})")
    ents = [f.zero()] * (n * n)
    one = f.one()
    for y in range(n):
        ents[y * n + y] = f.add(ents[y * n + y], one)
        yx = group_table[y][x]
        ents[yx * n + y] = f.sub(ents[yx * n + y], one)
    return Matrix(f, n, n, tuple(ents))


def image_in_augmentation_ideal(D: Matrix) -> bool:
    """True iff every column of D sums to zero (image inside ker ε)."""
    f = D.field
    for j in range(D.ncols):
        acc = f.zero()
        for i in range(D.nrows):
            acc = f.add(acc, D.entry(i, j))
        if acc:
            return False
    return True
