"""Finite quandles as validated Cayley tables.

A quandle is a set {0, ..., n-1} with a binary operation x ⊳ y that is
idempotent (axiom I), right-invertible (axiom II) and right self-distributive
(axiom III).  Tables are oriented so that ``table[x][y] = x ⊳ y``: the row
element is acted on, the column element acts.  The built-in catalog carries
the standard isomorphism-class representatives of orders 3 and 4, converted
once and for all from 1-indexed to 0-indexed entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

TableLike = Sequence[Sequence[int]]


class AxiomViolation(Exception):
    """A Cayley table that fails one of the three quandle axioms.

    ``axiom`` is "I", "II" or "III"; ``witness`` is the first offending
    tuple in lexicographic scan order: (x,) for I, (y,) for II, (x, y, z)
    for III.
    """

    def __init__(self, axiom: str, witness: tuple[int, ...], detail: str = ""):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"axiom {axiom} violated at {witness}" + (f": {detail}" if detail else ""))


class NotAGroupError(Exception):
    """A table passed as a group Cayley table is not a group."""

    def __init__(self, reason: str, witness: tuple[int, ...] = ()):
        self.reason = reason
        self.witness = witness
        super().__init__(f"not a group ({reason}) at {witness}")


@dataclass(frozen=True)
class AlexanderParams:
    """Parameters of an affine quandle on Z_n: x ⊳ y = alpha*x + beta*y.

    alpha must be a unit mod n and beta is forced to (1 - alpha) mod n, so
    that idempotence holds.
    """

    n: int
    alpha: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "alpha", self.alpha % self.n)
        if gcd(self.alpha, self.n) != 1:
            raise ValueError(f"alpha={self.alpha} is not a unit mod {self.n}")

    @property
    def beta(self) -> int:
        return (1 - self.alpha) % self.n


@dataclass(frozen=True)
class Quandle:
    """A validated finite quandle.

    ``label`` tags catalog entries; ``alexander`` records the affine
    parameters for quandles built from them (used by the Alexander-specific
    operator computations).  Neither participates in equality.
    """

    n: int
    table: tuple[tuple[int, ...], ...]
    label: str | None = field(default=None, compare=False)
    alexander: AlexanderParams | None = field(default=None, compare=False)

    def apply(self, x: int, y: int) -> int:
        """x ⊳ y."""
        return self.table[x][y]

    def column_perm(self, y: int) -> tuple[int, ...]:
        """The permutation x ↦ x ⊳ y (right multiplication by y)."""
        return tuple(self.table[x][y] for x in range(self.n))

    def column_perm_inverse(self, y: int) -> tuple[int, ...]:
        inv = [0] * self.n
        for x in range(self.n):
            inv[self.table[x][y]] = x
        return tuple(inv)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "table": [list(row) for row in self.table]}


@dataclass(frozen=True)
class QuandleProps:
    involutive: bool
    latin: bool
    medial: bool
    connected: bool
    orbits: tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# validation


def check_axioms(table: TableLike) -> AxiomViolation | None:
    """Return the first axiom violation in scan order, or None."""
    n = len(table)
    for x in range(n):
        if len(table[x]) != n:
            raise ValueError("table is not square")
        for y in range(n):
            if not (0 <= table[x][y] < n):
                raise ValueError(f"entry out of range at ({x}, {y})")
    for x in range(n):
        if table[x][x] != x:
            return AxiomViolation("I", (x,), f"{x} ⊳ {x} = {table[x][x]}")
    for y in range(n):
        seen = [False] * n
        for x in range(n):
            seen[table[x][y]] = True
        if not all(seen):
            return AxiomViolation("II", (y,), "column map is not a permutation")
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if table[table[x][y]][z] != table[table[x][z]][table[y][z]]:
                    return AxiomViolation("III", (x, y, z))
    return None


def validate(table: TableLike, label: str | None = None,
             alexander: AlexanderParams | None = None) -> Quandle:
    """Build a Quandle from a raw table, raising AxiomViolation on failure."""
    violation = check_axioms(table)
    if violation is not None:
        raise violation
    frozen = tuple(tuple(int(v) for v in row) for row in table)
    return Quandle(len(frozen), frozen, label=label, alexander=alexander)


def from_json_dict(data: dict, label: str | None = None) -> Quandle:
    table = data["table"]
    if data.get("n", len(table)) != len(table):
        raise ValueError("declared order does not match table size")
    for row in table:
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"table entries must be integers, got {v!r}")
    return validate(table, label=label)


# ---------------------------------------------------------------------------
# constructors


def trivial(n: int) -> Quandle:
    """x ⊳ y = x."""
    if n < 1:
        raise ValueError("order must be positive")
    table = tuple(tuple(x for _ in range(n)) for x in range(n))
    return Quandle(n, table, alexander=AlexanderParams(n, 1))


def dihedral(n: int) -> Quandle:
    """x ⊳ y = 2y - x on Z_n."""
    if n < 1:
        raise ValueError("order must be positive")
    table = tuple(tuple((2 * y - x) % n for y in range(n)) for x in range(n))
    return Quandle(n, table, alexander=AlexanderParams(n, n - 1))


def alexander(n: int | AlexanderParams, alpha: int | None = None) -> Quandle:
    """x ⊳ y = alpha*x + (1 - alpha)*y on Z_n."""
    params = n if isinstance(n, AlexanderParams) else AlexanderParams(n, alpha)
    a, b, m = params.alpha, params.beta, params.n
    table = tuple(tuple((a * x + b * y) % m for y in range(m)) for x in range(m))
    return Quandle(m, table, alexander=params)


def _check_group(table: TableLike) -> tuple[int, tuple[int, ...]]:
    """Validate a group Cayley table; return (identity, inverse lookup)."""
    n = len(table)
    for row in table:
        if len(row) != n:
            raise NotAGroupError("table is not square")
        for v in row:
            if not (0 <= v < n):
                raise NotAGroupError("entry out of range")
    identity = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAGroupError("no identity element")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise NotAGroupError("not associative", (a, b, c))
    inv = [None] * n
    for a in range(n):
        for b in range(n):
            if table[a][b] == identity and table[b][a] == identity:
                inv[a] = b
                break
        if inv[a] is None:
            raise NotAGroupError("missing inverse", (a,))
    return identity, tuple(inv)


def conjugation(group_table: TableLike) -> Quandle:
    """The quandle x ⊳ y = y⁻¹ x y on a group given by its Cayley table."""
    _, inv = _check_group(group_table)
    n = len(group_table)
    table = tuple(
        tuple(group_table[group_table[inv[y]][x]][y] for y in range(n)) for x in range(n)
    )
    return validate(table)


def cyclic_group_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Cayley table of Z_n."""
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


# The symmetric group on three letters, elements ordered 1, y, y², x, yx, y²x
# with x² = 1 = y³ and xyx = y⁻¹.
S3_TABLE: tuple[tuple[int, ...], ...] = (
    (0, 1, 2, 3, 4, 5),
    (1, 2, 0, 4, 5, 3),
    (2, 0, 1, 5, 3, 4),
    (3, 5, 4, 0, 2, 1),
    (4, 3, 5, 1, 0, 2),
    (5, 4, 3, 2, 1, 0),
)


def relabel(q: Quandle, perm: Sequence[int]) -> Quandle:
    """Apply the relabeling x ↦ perm[x] to a quandle."""
    if sorted(perm) != list(range(q.n)):
        raise ValueError("not a permutation")
    table = [[0] * q.n for _ in range(q.n)]
    for x in range(q.n):
        for y in range(q.n):
            table[perm[x]][perm[y]] = perm[q.table[x][y]]
    return validate(table)


# ---------------------------------------------------------------------------
# structural predicates


def props(q: Quandle) -> QuandleProps:
    n, t = q.n, q.table
    involutive = all(t[t[x][y]][y] == x for x in range(n) for y in range(n))
    latin = all(sorted(t[x]) == list(range(n)) for x in range(n))
    medial = all(
        t[t[w][x]][t[y][z]] == t[t[w][y]][t[x][z]]
        for w in range(n) for x in range(n) for y in range(n) for z in range(n)
    )
    # Orbits of the inner automorphism group: close each point under all
    # column permutations (generators have finite order, so no inverses needed).
    seen = [False] * n
    orbits = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for y in range(n):
                image = t[x][y]
                if image not in orbit:
                    orbit.add(image)
                    frontier.append(image)
        for x in orbit:
            seen[x] = True
        orbits.append(tuple(sorted(orbit)))
    orbits.sort()
    return QuandleProps(
        involutive=involutive,
        latin=latin,
        medial=medial,
        connected=len(orbits) == 1,
        orbits=tuple(orbits),
    )


# ---------------------------------------------------------------------------
# catalog of small quandles (orders 3 and 4, standard representatives,
# 0-indexed; labels follow the order-major "order.index" scheme)

_CATALOG_3 = (
    ("3.1", ((0, 0, 0), (1, 1, 1), (2, 2, 2))),
    ("3.2", ((0, 0, 1), (1, 1, 0), (2, 2, 2))),
    ("3.3", ((0, 2, 1), (2, 1, 0), (1, 0, 2))),
)

_CATALOG_4 = (
    ("4.1", ((0, 0, 0, 0), (1, 1, 1, 1), (2, 2, 2, 2), (3, 3, 3, 3))),
    ("4.2", ((0, 0, 0, 0), (1, 1, 1, 2), (2, 2, 2, 1), (3, 3, 3, 3))),
    ("4.3", ((0, 0, 0, 1), (1, 1, 1, 2), (2, 2, 2, 0), (3, 3, 3, 3))),
    ("4.4", ((0, 0, 0, 0), (1, 1, 3, 2), (2, 3, 2, 1), (3, 2, 1, 3))),
    ("4.5", ((0, 0, 1, 1), (1, 1, 0, 0), (2, 2, 2, 2), (3, 3, 3, 3))),
    ("4.6", ((0, 0, 1, 1), (1, 1, 0, 0), (3, 3, 2, 2), (2, 2, 3, 3))),
    ("4.7", ((0, 3, 1, 2), (2, 1, 3, 0), (3, 0, 2, 1), (1, 2, 0, 3))),
)


def catalog(order: int) -> list[Quandle]:
    """All quandles of the given order (3 or 7 entries), in catalog order."""
    if order == 3:
        raw = _CATALOG_3
    elif order == 4:
        raw = _CATALOG_4
    else:
        raise ValueError(f"catalog covers orders 3 and 4 only, not {order}")
    return [validate(table, label=label) for label, table in raw]


def catalog_labels() -> list[str]:
    return [label for label, _ in _CATALOG_3 + _CATALOG_4]


def catalog_lookup(label: str) -> Quandle:
    for lbl, table in _CATALOG_3 + _CATALOG_4:
        if lbl == label:
            return validate(table, label=lbl)
    raise KeyError(f"no catalog quandle labeled {label!r}")


def parse_quandle_spec(spec: str) -> Quandle:
    """Build a quandle from a compact text spec.

    Accepted forms: ``trivial:N``, ``dihedral:N``, ``alexander:N,ALPHA``,
    ``conjugation:s3``, ``conjugation:zN`` and ``catalog:LABEL``.
    """
    kind, _, arg = spec.partition(":")
    kind = kind.strip().lower()
    arg = arg.strip()
    if not arg:
        raise ValueError(f"malformed quandle spec {spec!r}")
    if kind == "trivial":
        return trivial(int(arg))
    if kind == "dihedral":
        return dihedral(int(arg))
    if kind == "alexander":
        n_text, _, alpha_text = arg.partition(",")
        return alexander(int(n_text), int(alpha_text))
    if kind == "conjugation":
        name = arg.lower()
        if name == "s3":
            return conjugation(S3_TABLE)
        if name.startswith("z"):
            return conjugation(cyclic_group_table(int(name[1:])))
        raise ValueError(f"unknown group name {arg!r} (use s3 or zN)")
    if kind == "catalog":
        return catalog_lookup(arg)
    raise ValueError(f"unknown quandle spec kind {kind!r}")
