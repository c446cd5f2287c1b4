"""Exact dense linear algebra over the rational numbers.

Everything runs on :class:`fractions.Fraction`, so row reduction,
nullspaces and the subspace lattice (membership, sum, intersection) are
exact.  Ambient dimensions stay small here (a few hundred columns at
most), hence the dense row-major layout and plain leftmost-first
pivoting with no further heuristics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = int | str | Fraction
Vec = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def frac(value: Rat) -> Fraction:
    """Coerce an int, a "p/q" string or a Fraction; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f"not an exact rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational literal {value!r}: {exc}") from None
    raise TypeError(f"not an exact rational: {value!r}")


def vec(values: Iterable[Rat]) -> Vec:
    return tuple(frac(v) for v in values)


def zero_vec(n: int) -> Vec:
    return (_ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(_ONE if j == i else _ZERO for j in range(n))


def vadd(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vscale(s: Rat, a: Sequence[Fraction]) -> Vec:
    f = frac(s)
    return tuple(f * x for x in a)


def is_zero_vec(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    rows: int
    cols: int
    entries: Vec

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[Rat]], cols: int | None = None) -> "Matrix":
        parsed = [vec(r) for r in data]
        if parsed:
            width = len(parsed[0])
            if any(len(r) != width for r in parsed):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError(f"expected {cols} columns, got {width}")
            cols = width
        elif cols is None:
            cols = 0
        return cls(len(parsed), cols, tuple(x for r in parsed for x in r))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(_ONE if i == j else _ZERO
                               for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    def at(self, r: int, c: int) -> Fraction:
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> Vec:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def col(self, c: int) -> Vec:
        return tuple(self.entries[r * self.cols + c] for r in range(self.rows))

    def row_lists(self) -> list[list[Fraction]]:
        return [list(self.row(r)) for r in range(self.rows)]

    def matvec(self, v: Sequence[Rat]) -> Vec:
        w = vec(v)
        if len(w) != self.cols:
            raise ValueError("matvec length mismatch")
        out = []
        for r in range(self.rows):
            acc = _ZERO
            base = r * self.cols
            for c in range(self.cols):
                if w[c]:
                    acc += self.entries[base + c] * w[c]
            out.append(acc)
        return tuple(out)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("matmul shape mismatch")
        out = []
        for r in range(self.rows):
            row = self.row(r)
            for c in range(other.cols):
                acc = _ZERO
                for k in range(self.cols):
                    if row[k]:
                        acc += row[k] * other.entries[k * other.cols + c]
                out.append(acc)
        return Matrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shape mismatch")
        return Matrix(self.rows, self.cols,
                      tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shape mismatch")
        return Matrix(self.rows, self.cols,
                      tuple(x - y for x, y in zip(self.entries, other.entries)))

    def scale(self, s: Rat) -> "Matrix":
        f = frac(s)
        return Matrix(self.rows, self.cols, tuple(f * x for x in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self.at(r, c) for c in range(self.cols) for r in range(self.rows)))

    def power(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        out = Matrix.identity(self.rows)
        for _ in range(k):
            out = out.matmul(self)
        return out

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    ent: list[Fraction] = []
    for r in range(a.rows):
        ent.extend(a.row(r))
        ent.extend(zero_vec(b.cols))
    for r in range(b.rows):
        ent.extend(zero_vec(a.cols))
        ent.extend(b.row(r))
    return Matrix(a.rows + b.rows, a.cols + b.cols, tuple(ent))


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """Reduced row echelon form; returns (R, pivot_columns, rank).

    Deterministic: columns are scanned left to right and the first row
    with a nonzero entry in the current column becomes the pivot.
    """
    a = m.row_lists()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        hit = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if hit is None:
            continue
        a[r], a[hit] = a[hit], a[r]
        p = a[r][c]
        if p != 1:
            a[r] = [x / p for x in a[r]]
        lead = a[r]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], lead)]
        pivots.append(c)
        r += 1
    return Matrix.from_rows(a, m.cols), tuple(pivots), len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held as its canonical RREF basis (rows).

    Canonical form makes equality entry-wise: two subspaces coincide
    exactly when their stored bases are identical.
    """

    ambient_dim: int
    basis: tuple[Vec, ...]

    def __post_init__(self):
        for row in self.basis:
            if len(row) != self.ambient_dim:
                raise ValueError("basis row length does not match ambient dimension")

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence[Rat]]) -> "Subspace":
        vs = [vec(v) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise ValueError(f"expected vectors of length {ambient_dim}")
        if not vs:
            return cls(ambient_dim, ())
        reduced, _, rk = rref(Matrix.from_rows(vs, ambient_dim))
        return cls(ambient_dim, tuple(reduced.row(i) for i in range(rk)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(unit_vec(ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis


def contains(s: Subspace, v: Sequence[Rat]) -> bool:
    """Exact membership, decided by eliminating v against the basis."""
    w = list(vec(v))
    if len(w) != s.ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    for row in s.basis:
        lead = next(i for i, x in enumerate(row) if x != 0)
        coef = w[lead]
        if coef:
            w = [x - coef * y for x, y in zip(w, row)]
    return all(x == 0 for x in w)


def is_subspace(a: Subspace, b: Subspace) -> bool:
    """True when every basis vector of a lies in b."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return all(contains(b, row) for row in a.basis)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace.from_vectors(a.ambient_dim, list(a.basis) + list(b.basis))


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Intersection through the kernel of the stacked-coefficient system.

    A common vector is sum(t_i a_i) = sum(u_j b_j); the (t, u) kernel is
    computed exactly and mapped back through a's basis.  The dimension
    formula dim a + dim b = dim(a+b) + dim(a^b) is asserted on the way
    out as a self-check.
    """
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    n = a.ambient_dim
    if a.is_zero() or b.is_zero():
        return Subspace.zero(n)
    rows = [[a.basis[i][c] for i in range(a.dim)]
            + [-b.basis[j][c] for j in range(b.dim)]
            for c in range(n)]
    ker = nullspace(Matrix.from_rows(rows, a.dim + b.dim))
    found = []
    for t in ker.basis:
        w: Sequence[Fraction] = zero_vec(n)
        for i in range(a.dim):
            if t[i]:
                w = vadd(w, vscale(t[i], a.basis[i]))
        found.append(w)
    inter = Subspace.from_vectors(n, found)
    assert a.dim + b.dim == subspace_sum(a, b).dim + inter.dim
    return inter


def nullspace(m: Matrix) -> Subspace:
    """Canonical basis of the right kernel {v : m v = 0}.

    Free variables are taken in ascending column order and the basis is
    reduced once more, so the output is deterministic across runs.
    """
    reduced, pivots, _ = rref(m)
    n = m.cols
    pivot_set = set(pivots)
    out = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [_ZERO] * n
        v[free] = _ONE
        for r, p in enumerate(pivots):
            v[p] = -reduced.at(r, free)
        out.append(v)
    return Subspace.from_vectors(n, out)


def solve_linear(m: Matrix, rhs: Sequence[Rat]) -> Vec | None:
    """One exact solution of m x = rhs (free variables 0), or None."""
    b = vec(rhs)
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    aug = Matrix.from_rows([list(m.row(r)) + [b[r]] for r in range(m.rows)], m.cols + 1)
    reduced, pivots, _ = rref(aug)
    if m.cols in pivots:
        return None
    x = [_ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = reduced.at(r, m.cols)
    return tuple(x)


def format_vec(v: Sequence[Fraction]) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def format_matrix(m: Matrix) -> str:
    return "[" + "; ".join(" ".join(str(x) for x in m.row(r)) for r in range(m.rows)) + "]"
