"""The quandle algebra k[X]: the vector space on basis {e_x} with the
bilinear product e_x · e_y = e_{x ⊳ y}.

The product is generally non-associative.  Linear maps on the algebra are
``linalg.Matrix`` values in the column convention: column x of the matrix is
the image of e_x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fields import FieldSpec, Scalar
from .linalg import Matrix, SubspaceBasis, _Echelon, nullspace
from .quandles import Quandle, props as quandle_props


@dataclass(frozen=True)
class AlgebraElement:
    """An element sum_x coeffs[x] * e_x of the quandle algebra."""

    field: FieldSpec
    coeffs: tuple[Scalar, ...]

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "AlgebraElement") -> None:
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.n != other.n:
            raise ValueError("length mismatch")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        add = self.field.add
        return AlgebraElement(self.field, tuple(add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        sub = self.field.sub
        return AlgebraElement(self.field, tuple(sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "AlgebraElement":
        neg = self.field.neg
        return AlgebraElement(self.field, tuple(neg(a) for a in self.coeffs))

    def scale(self, s: Scalar) -> "AlgebraElement":
        s = self.field.coerce(s)
        mul = self.field.mul
        return AlgebraElement(self.field, tuple(mul(s, a) for a in self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for x, c in enumerate(self.coeffs):
            if not c:
                continue
            if c == self.field.one():
                terms.append(f"e{x}")
            else:
                terms.append(f"{c}*e{x}")
        body = " + ".join(terms) if terms else "0"
        return f"<{body} over {self.field.name}>"


def zero_element(field: FieldSpec, n: int) -> AlgebraElement:
    return AlgebraElement(field, (field.zero(),) * n)


def basis_element(field: FieldSpec, n: int, x: int) -> AlgebraElement:
    coeffs = [field.zero()] * n
    coeffs[x] = field.one()
    return AlgebraElement(field, tuple(coeffs))


def element(field: FieldSpec, coeffs: Sequence[Scalar | int | str]) -> AlgebraElement:
    return AlgebraElement(field, tuple(field.coerce(c) for c in coeffs))


# ---------------------------------------------------------------------------
# product and augmentation


def multiply(a: AlgebraElement, b: AlgebraElement, q: Quandle) -> AlgebraElement:
    """Bilinear extension of e_x · e_y = e_{x ⊳ y}."""
    a._check(b)
    if a.n != q.n:
        raise ValueError("element length does not match quandle order")
    f = a.field
    out: list[Scalar] = [f.zero()] * q.n
    for x, ax in enumerate(a.coeffs):
        if not ax:
            continue
        row = q.table[x]
        for y, by in enumerate(b.coeffs):
            if by:
                u = row[y]
                out[u] = f.add(out[u], f.mul(ax, by))
    return AlgebraElement(f, tuple(out))


def augmentation(a: AlgebraElement) -> Scalar:
    """Coefficient sum; a ring homomorphism onto the ground field."""
    f = a.field
    acc = f.zero()
    for c in a.coeffs:
        acc = f.add(acc, c)
    return acc


def augmentation_ideal(q: Quandle, f: FieldSpec) -> SubspaceBasis:
    """Canonical basis of the kernel of the augmentation map (dimension n-1)."""
    ones = Matrix.from_rows(f, [[1] * q.n])
    return nullspace(ones)


# ---------------------------------------------------------------------------
# multiplication operators


def left_mult(x: int, q: Quandle, f: FieldSpec) -> Matrix:
    """The operator e_y ↦ e_{x ⊳ y}."""
    if not (0 <= x < q.n):
        raise IndexError(f"element {x} out of range")
    n = q.n
    ents = [f.zero()] * (n * n)
    one = f.one()
    for y in range(n):
        ents[q.table[x][y] * n + y] = one
    return Matrix(f, n, n, tuple(ents))


def right_mult(x: int, q: Quandle, f: FieldSpec) -> Matrix:
    """The operator e_y ↦ e_{y ⊳ x}; always a permutation matrix."""
    if not (0 <= x < q.n):
        raise IndexError(f"element {x} out of range")
    n = q.n
    ents = [f.zero()] * (n * n)
    one = f.one()
    for y in range(n):
        ents[q.table[y][x] * n + y] = one
    return Matrix(f, n, n, tuple(ents))


# ---------------------------------------------------------------------------
# the commutator-difference right ideal


def _right_multiply_vector(vec: Sequence[Scalar], z: int, q: Quandle, f: FieldSpec) -> list[Scalar]:
    out: list[Scalar] = [f.zero()] * q.n
    for x, v in enumerate(vec):
        if v:
            u = q.table[x][z]
            out[u] = f.add(out[u], v)
    return out


def _left_multiply_vector(vec: Sequence[Scalar], z: int, q: Quandle, f: FieldSpec) -> list[Scalar]:
    out: list[Scalar] = [f.zero()] * q.n
    row = q.table[z]
    for x, v in enumerate(vec):
        if v:
            u = row[x]
            out[u] = f.add(out[u], v)
    return out


def jx_ideal(q: Quandle, f: FieldSpec) -> SubspaceBasis:
    """Smallest right ideal containing all e_{x⊳y} - e_{y⊳x}.

    Seeds with the generators and closes under right multiplication by every
    basis vector; multiplying by basis vectors suffices by bilinearity, and
    the loop terminates because the dimension is bounded by n.  When the
    quandle is medial the result is also a left ideal, which is verified.
    """
    n = q.n
    ech = _Echelon(f, n)
    frontier: list[list[Scalar]] = []
    for x in range(n):
        for y in range(n):
            u, v = q.table[x][y], q.table[y][x]
            if u == v:
                continue
            vec: list[Scalar] = [f.zero()] * n
            vec[u] = f.one()
            vec[v] = f.neg(f.one())
            if ech.insert_dense(vec):
                frontier.append(vec)
    while frontier:
        new_frontier = []
        for vec in frontier:
            for z in range(n):
                prod = _right_multiply_vector(vec, z, q, f)
                if any(prod) and ech.insert_dense(prod):
                    new_frontier.append(prod)
        frontier = new_frontier
    basis = SubspaceBasis(f, n, tuple(row for _, row in ech.finalize()))
    if quandle_props(q).medial:
        for vec in basis.vectors:
            for z in range(n):
                prod = _left_multiply_vector(vec, z, q, f)
                if any(prod) and not ech.contains(ech._sparsify(prod)):
                    raise RuntimeError("medial quandle ideal failed left closure")
    return basis
