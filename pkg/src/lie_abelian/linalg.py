"""Exact linear algebra over Scalar: RREF, kernels, canonical subspaces.

Vectors are plain tuples of Scalar.  A `Subspace` is always stored by the
reduced row echelon form of a spanning set, which makes the representation
canonical: two subspaces are equal exactly when their stored rows are
equal.  Pivoting picks the first nonzero entry in column order; with exact
arithmetic no numerical pivoting is needed.
"""

from __future__ import annotations

from .errors import AmbientMismatch, SingularTransform
from .fields import Q, QI, Scalar

# -- vector helpers ------------------------------------------------------


def vec(values, field=Q):
    return tuple(Scalar.coerce(v, field) for v in values)


def zero_vec(n, field=Q):
    z = Scalar.zero(field)
    return (z,) * n


def unit_vec(n, index, field=Q):
    return tuple(
        Scalar.one(field) if c == index else Scalar.zero(field) for c in range(n)
    )


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(u, c):
    return tuple(c * a for a in u)


def vec_is_zero(u):
    return all(not a for a in u)


class Matrix:
    """Immutable dense matrix with Scalar entries."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, rows, cols, entries, field=Q):
        entries = tuple(tuple(Scalar.coerce(x, field) for x in row) for row in entries)
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise AmbientMismatch("entry grid does not match the declared shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self.field = field

    @classmethod
    def from_rows(cls, row_vectors, cols=None, field=Q):
        row_vectors = [tuple(r) for r in row_vectors]
        if cols is None:
            if not row_vectors:
                raise AmbientMismatch("cannot infer width of an empty matrix")
            cols = len(row_vectors[0])
        return cls(len(row_vectors), cols, row_vectors, field)

    @classmethod
    def identity(cls, n, field=Q):
        return cls(n, n, [unit_vec(n, i, field) for i in range(n)], field)

    @classmethod
    def zero(cls, rows, cols, field=Q):
        return cls(rows, cols, [zero_vec(cols, field)] * rows, field)

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [self.column(j) for j in range(self.cols)], self.field)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise AmbientMismatch("inner dimensions differ")
        field = QI if QI in (self.field, other.field) else Q
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = Scalar.zero(field)
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(tuple(row))
        return Matrix(self.rows, other.cols, out, field)

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise AmbientMismatch("shapes differ")
        field = QI if QI in (self.field, other.field) else Q
        return Matrix(
            self.rows, self.cols,
            [vec_add(a, b) for a, b in zip(self.entries, other.entries)], field,
        )

    def __sub__(self, other):
        return self + other.scale(Scalar(-1))

    def scale(self, c):
        return Matrix(self.rows, self.cols,
                      [vec_scale(r, c) for r in self.entries], self.field)

    def trace(self):
        acc = Scalar.zero(self.field)
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.entries[i][i]
        return acc

    def is_zero(self):
        return all(vec_is_zero(r) for r in self.entries)

    def apply(self, v):
        """Matrix-vector product (v a column vector)."""
        if len(v) != self.cols:
            raise AmbientMismatch("vector length differs from column count")
        return tuple(
            sum((self.entries[i][k] * v[k] for k in range(self.cols)),
                Scalar.zero(self.field))
            for i in range(self.rows)
        )

    def flatten(self):
        return tuple(x for row in self.entries for x in row)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"


def rref(m):
    """Reduced row echelon form.  Returns (rref_matrix, pivots, rank)."""
    work = [list(row) for row in m.entries]
    pivots = []
    r = 0
    for c in range(m.cols):
        pivot_row = None
        for i in range(r, m.rows):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][c].inverse()
        work[r] = [inv * x for x in work[r]]
        for i in range(m.rows):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    out = Matrix(m.rows, m.cols, [tuple(row) for row in work], m.field)
    return out, tuple(pivots), len(pivots)


def kernel(m):
    """Null space {x : m @ x = 0} as a canonical Subspace of dimension cols - rank."""
    reduced, pivots, rank = rref(m)
    free_cols = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free_cols:
        v = [Scalar.zero(m.field)] * m.cols
        v[fc] = Scalar.one(m.field)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced.entries[r][fc]
        basis.append(tuple(v))
    return Subspace.from_vectors(m.cols, basis, m.field)


def inverse(m):
    """Inverse of a square matrix; raises SingularTransform when singular."""
    if m.rows != m.cols:
        raise SingularTransform("only square matrices can be inverted")
    n = m.rows
    aug = Matrix.from_rows(
        [tuple(m.entries[i]) + unit_vec(n, i, m.field) for i in range(n)],
        2 * n, m.field,
    )
    reduced, pivots, rank = rref(aug)
    if rank < n or any(p >= n for p in pivots):
        raise SingularTransform("matrix is singular")
    return Matrix(n, n, [row[n:] for row in reduced.entries], m.field)


class Subspace:
    """A subspace of K^n held by its RREF basis (canonical form)."""

    __slots__ = ("n", "rows", "pivots", "field")

    def __init__(self, n, rows, pivots, field=Q):
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        self.field = field

    @classmethod
    def from_vectors(cls, n, vectors, field=Q):
        vectors = [vec(v, field) for v in vectors]
        for v in vectors:
            if len(v) != n:
                raise AmbientMismatch("vector length differs from ambient dimension")
        if not vectors:
            return cls(n, (), (), field)
        reduced, pivots, rank = rref(Matrix.from_rows(vectors, n, field))
        return cls(n, reduced.entries[:rank], pivots, field)

    @classmethod
    def zero(cls, n, field=Q):
        return cls(n, (), (), field)

    @classmethod
    def full(cls, n, field=Q):
        return cls(n, [unit_vec(n, i, field) for i in range(n)], range(n), field)

    @property
    def dim(self):
        return len(self.rows)

    def basis_matrix(self):
        return Matrix.from_rows(list(self.rows) or [], self.n, self.field) \
            if self.rows else Matrix.zero(0, self.n, self.field)

    def _check_ambient(self, other):
        if self.n != other.n:
            raise AmbientMismatch(
                f"ambient dimensions differ: {self.n} vs {other.n}")

    def reduce_vector(self, v):
        """Residual of v after eliminating this subspace's pivot columns."""
        if len(v) != self.n:
            raise AmbientMismatch("vector length differs from ambient dimension")
        residual = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = residual[p]
            if c:
                residual = [a - c * b for a, b in zip(residual, row)]
        return tuple(residual)

    def contains_vector(self, v):
        return vec_is_zero(self.reduce_vector(v))

    def coordinates_of(self, v):
        """Coefficients of v in this basis, or None when v is outside."""
        coords = []
        residual = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = residual[p]
            coords.append(c)
            if c:
                residual = [a - c * b for a, b in zip(residual, row)]
        if not vec_is_zero(residual):
            return None
        return tuple(coords)

    def contains_subspace(self, other):
        self._check_ambient(other)
        return all(self.contains_vector(r) for r in other.rows)

    def sum(self, other):
        self._check_ambient(other)
        return Subspace.from_vectors(
            self.n, list(self.rows) + list(other.rows), self.field)

    def intersection(self, other):
        """Zassenhaus: row-reduce [[A,A],[B,0]]; rows with zero left half
        carry an intersection basis in the right half."""
        self._check_ambient(other)
        n = self.n
        z = zero_vec(n, self.field)
        stacked = [r + r for r in self.rows] + [r + z for r in other.rows]
        if not stacked:
            return Subspace.zero(n, self.field)
        reduced, pivots, rank = rref(Matrix.from_rows(stacked, 2 * n, self.field))
        carried = [
            row[n:]
            for row in reduced.entries[:rank]
            if vec_is_zero(row[:n])
        ]
        return Subspace.from_vectors(n, carried, self.field)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Subspace(dim {self.dim} of K^{self.n}: {rows})"


def subspace_query(kind, a, b):
    """Set-theoretic subspace queries with exact semantics.

    kind is one of contains_vector, contains_subspace, sum, intersection;
    b is a vector for contains_vector and a Subspace otherwise.
    """
    if kind == "contains_vector":
        return a.contains_vector(b)
    if kind == "contains_subspace":
        return a.contains_subspace(b)
    if kind == "sum":
        return a.sum(b)
    if kind == "intersection":
        return a.intersection(b)
    raise ValueError(f"unknown subspace query {kind!r}")
