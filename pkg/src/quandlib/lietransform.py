"""Lie transformation algebras of quandle algebras and inner derivations.

The Lie transformation algebra of an algebra A is the smallest Lie algebra
of linear operators containing the identity together with every left and
right multiplication; it is computed here by full pairwise commutator
closure, which terminates because the operator space has dimension at most
n².  A derivation lying inside it is an inner derivation.

Operators are flattened column-major (column x first) into n²-dimensional
coordinate space; golden outputs depend on that convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fields import FieldSpec, Scalar
from .linalg import Matrix, SubspaceBasis, _Echelon, contains, span_from_vectors, span_intersect
from .quandles import Quandle
from .algebra import left_mult, right_mult
from .derivations import derivation_space


def flatten_operator(m: Matrix) -> tuple[Scalar, ...]:
    """Column-major flattening: image coordinates of e_0, then of e_1, ..."""
    n = m.nrows
    return tuple(m.entry(u, x) for x in range(n) for u in range(n))


def operator_from_flat(f: FieldSpec, n: int, vec: Sequence[Scalar]) -> Matrix:
    ents = [f.zero()] * (n * n)
    for x in range(n):
        for u in range(n):
            ents[u * n + x] = vec[x * n + u]
    return Matrix(f, n, n, tuple(ents))


def commutator(a: Matrix, b: Matrix) -> Matrix:
    """AB - BA."""
    if a.field != b.field:
        raise ValueError("field mismatch")
    if a.nrows != b.nrows or a.ncols != b.ncols or a.nrows != a.ncols:
        raise ValueError("commutator needs square matrices of equal order")
    return (a @ b) - (b @ a)


@dataclass(frozen=True)
class OperatorSpace:
    """A commutator-closed operator subspace with its generation history.

    ``generator_log`` names, in insertion order, the elements that grew the
    span: the seeds first, then brackets of canonical basis elements by
    closure round (diagnostic only; the canonical basis is ``matrices``).
    """

    field: FieldSpec
    n: int
    subspace: SubspaceBasis
    matrices: tuple[Matrix, ...]
    generator_log: tuple[str, ...]

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def contains_operator(self, m: Matrix) -> bool:
        return contains(self.subspace, flatten_operator(m))


def _canonical_matrices(f: FieldSpec, n: int, ech: _Echelon) -> tuple[SubspaceBasis, tuple[Matrix, ...]]:
    basis = SubspaceBasis(f, n * n, tuple(row for _, row in ech.finalize()))
    mats = tuple(operator_from_flat(f, n, vec) for vec in basis.vectors)
    return basis, mats


def _seed_operators(q: Quandle, f: FieldSpec) -> list[tuple[str, Matrix]]:
    seeds = [("id", Matrix.identity(f, q.n))]
    seeds += [(f"L{x}", left_mult(x, q, f)) for x in range(q.n)]
    seeds += [(f"R{x}", right_mult(x, q, f)) for x in range(q.n)]
    return seeds


def lie_transformation_algebra(q: Quandle, f: FieldSpec) -> OperatorSpace:
    """Commutator closure of {id} ∪ {L_x} ∪ {R_x} acting on k[X].

    Full pairwise brackets of the current canonical basis are adjoined each
    round until the dimension stabilizes.  Bracketing only against the seed
    span (the tower; see ``transformation_algebra_by_tower``) yields the
    same space; full closure is used for robustness and the tower variant
    is kept as a cross-check.
    """
    n = q.n
    ech = _Echelon(f, n * n)
    log: list[str] = []
    for name, mat in _seed_operators(q, f):
        if ech.insert_dense(flatten_operator(mat)):
            log.append(name)
    basis, mats = _canonical_matrices(f, n, ech)
    round_no = 0
    while True:
        round_no += 1
        grew = False
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                bracket = commutator(mats[i], mats[j])
                if bracket.is_zero:
                    continue
                if ech.insert_dense(flatten_operator(bracket)):
                    log.append(f"round{round_no}:[b{i},b{j}]")
                    grew = True
        if not grew:
            break
        basis, mats = _canonical_matrices(f, n, ech)
    return OperatorSpace(field=f, n=n, subspace=basis, matrices=mats, generator_log=tuple(log))


def transformation_algebra_by_tower(q: Quandle, f: FieldSpec) -> SubspaceBasis:
    """The same algebra built as the tower T_1 + [T_1, T_1] + [T_1, [T_1, ...]].

    Each stage brackets the previous stage against the seed span only.
    Kept as an independent cross-check of the full pairwise closure.
    """
    n = q.n
    seed_mats = [m for _, m in _seed_operators(q, f)]
    ech = _Echelon(f, n * n)
    stage = []
    for m in seed_mats:
        if ech.insert_dense(flatten_operator(m)):
            stage.append(m)
    while stage:
        next_stage = []
        for s in seed_mats:
            for t in stage:
                bracket = commutator(s, t)
                if not bracket.is_zero and ech.insert_dense(flatten_operator(bracket)):
                    next_stage.append(bracket)
        stage = next_stage
    return SubspaceBasis(f, n * n, tuple(row for _, row in ech.finalize()))


# ---------------------------------------------------------------------------
# inner derivations


@dataclass(frozen=True)
class InnerDerivations:
    """Derivations lying inside the Lie transformation algebra."""

    basis: SubspaceBasis  # column-major flattened, canonical
    inner_dim: int
    outer_dim: int
    derivation_dim: int
    transformation_dim: int


def inner_derivations(q: Quandle, f: FieldSpec) -> InnerDerivations:
    der = derivation_space(q, f)
    der_flat = span_from_vectors(
        f, q.n * q.n, [flatten_operator(m) for m in der.basis]
    )
    transf = lie_transformation_algebra(q, f)
    inner = span_intersect(der_flat, transf.subspace)
    return InnerDerivations(
        basis=inner,
        inner_dim=inner.dim,
        outer_dim=der.dim - inner.dim,
        derivation_dim=der.dim,
        transformation_dim=transf.dim,
    )


# ---------------------------------------------------------------------------
# products of left and right multiplication operators


@dataclass(frozen=True)
class LrSpan:
    """The span of (left-word)·(right-word) operator products.

    ``contains_transformation_algebra`` reports the inclusion of the Lie
    transformation algebra in this span; ``strict`` whether the inclusion is
    proper.
    """

    basis: SubspaceBasis
    lr_dim: int
    transformation_dim: int
    contains_transformation_algebra: bool
    strict: bool


def _next_word_layer(layers: list[tuple[Matrix, ...]], gens: list[Matrix],
                     f: FieldSpec, n: int) -> None:
    """Append the canonical span basis of products one letter longer."""
    ech = _Echelon(f, n * n)
    for g in gens:
        for w in layers[-1]:
            ech.insert_dense(flatten_operator(g @ w))
    basis = SubspaceBasis(f, n * n, tuple(row for _, row in ech.finalize()))
    layers.append(tuple(operator_from_flat(f, n, v) for v in basis.vectors))


def lr_form_bound(q: Quandle, f: FieldSpec) -> LrSpan:
    """Span of all products (m left multiplications)·(k right multiplications).

    Word lengths grow until the accumulated span is unchanged for two
    consecutive total lengths (a hard cap of 2n²+2 guarantees termination).
    The Lie transformation algebra is then tested for membership.
    """
    n = q.n
    lgens = [left_mult(x, q, f) for x in range(n)]
    rgens = [right_mult(x, q, f) for x in range(n)]
    cap = 2 * n * n + 2
    lw: list[tuple[Matrix, ...]] = [(Matrix.identity(f, n),)]
    rw: list[tuple[Matrix, ...]] = [(Matrix.identity(f, n),)]
    ech = _Echelon(f, n * n)
    stable_rounds = 0
    for total in range(cap + 1):
        while len(lw) <= total:
            _next_word_layer(lw, lgens, f, n)
            _next_word_layer(rw, rgens, f, n)
        before = ech.rank
        for m in range(total + 1):
            k = total - m
            for a in lw[m]:
                for b in rw[k]:
                    ech.insert_dense(flatten_operator(a @ b))
        if ech.rank == before and total > 0:
            stable_rounds += 1
            if stable_rounds >= 2:
                break
        else:
            stable_rounds = 0
    basis = SubspaceBasis(f, n * n, tuple(row for _, row in ech.finalize()))
    transf = lie_transformation_algebra(q, f)
    contained = all(contains(basis, flatten_operator(m)) for m in transf.matrices)
    return LrSpan(
        basis=basis,
        lr_dim=basis.dim,
        transformation_dim=transf.dim,
        contains_transformation_algebra=contained,
        strict=contained and basis.dim > transf.dim,
    )


# ---------------------------------------------------------------------------
# the affine (Alexander) canonical form


@dataclass(frozen=True)
class AlexanderFormReport:
    """Membership of the transformation algebra in the affine product span.

    The span collects L_f·L_0^a·R_0^b and R_g·L_0^a·R_0^b over all basis
    indices f, g and all distinct powers a, b (power sequences of functional
    matrices cycle, so enumerating distinct powers is exact).
    """

    all_contained: bool
    failures: tuple[int, ...]
    span_dim: int
    transformation_dim: int


def _distinct_powers(m: Matrix) -> list[Matrix]:
    powers = [Matrix.identity(m.field, m.nrows)]
    seen = {powers[0].entries}
    cur = powers[0]
    while True:
        cur = cur @ m
        if cur.entries in seen:
            return powers
        seen.add(cur.entries)
        powers.append(cur)


def alexander_canonical_form(q: Quandle, f: FieldSpec) -> AlexanderFormReport:
    if q.alexander is None:
        raise ValueError("quandle does not carry affine parameters")
    n = q.n
    l0_powers = _distinct_powers(left_mult(0, q, f))
    r0_powers = _distinct_powers(right_mult(0, q, f))
    ech = _Echelon(f, n * n)
    heads = [left_mult(x, q, f) for x in range(n)] + [right_mult(x, q, f) for x in range(n)]
    for head in heads:
        for la in l0_powers:
            head_la = head @ la
            for rb in r0_powers:
                ech.insert_dense(flatten_operator(head_la @ rb))
    basis = SubspaceBasis(f, n * n, tuple(row for _, row in ech.finalize()))
    transf = lie_transformation_algebra(q, f)
    failures = tuple(
        i for i, m in enumerate(transf.matrices) if not contains(basis, flatten_operator(m))
    )
    return AlexanderFormReport(
        all_contained=not failures,
        failures=failures,
        span_dim=basis.dim,
        transformation_dim=transf.dim,
    )
