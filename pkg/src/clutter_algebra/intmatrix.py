"""Exact integer linear algebra: Smith normal form, minor gcds, lattice quotients.

All arithmetic is over Python's arbitrary-precision integers; there is no
floating point anywhere in this package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd


class ZeroMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        return IntMatrix(rows)

    @staticmethod
    def from_columns(cols) -> "IntMatrix":
        cols = [tuple(int(x) for x in c) for c in cols]
        return IntMatrix.from_rows(zip(*cols)) if cols else IntMatrix(())

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries))) if self.entries else self

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def is_binary(self) -> bool:
        return all(x in (0, 1) for r in self.entries for x in r)

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        ot = other.transpose().entries
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
                for row in self.entries
            )
        )

    def mul_vector(self, v) -> tuple[int, ...]:
        if self.cols != len(v):
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def stack_row(self, row) -> "IntMatrix":
        if len(row) != self.cols:
            raise ValueError("dimension mismatch")
        return IntMatrix(self.entries + (tuple(int(x) for x in row),))

    def as_incidence(self) -> "IntMatrix":
        """Validate the no-zero-row / no-zero-column convention for incidence matrices."""
        if self.rows == 0 or self.cols == 0:
            raise ValueError("incidence matrix must have positive dimensions")
        for i, r in enumerate(self.entries):
            if all(x == 0 for x in r):
                raise ValueError(f"zero row {i} in incidence matrix")
        for j in range(self.cols):
            if all(r[j] == 0 for r in self.entries):
                raise ValueError(f"zero column {j} in incidence matrix")
        return self


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors d_1 | d_2 | ... | d_r with unimodular transforms.

    left * M * right is the diagonal matrix carrying ``diag``.
    """

    diag: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.diag)


@dataclass(frozen=True)
class LatticeQuotient:
    """Z^rows / (column lattice): free rank plus the torsion divisibility chain."""

    free_rank: int
    torsion: tuple[int, ...]


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _pivot_position(m, start, rows, cols):
    """Minimal-absolute-value nonzero entry in the trailing block, to limit growth."""
    best = None
    for i in range(start, rows):
        for j in range(start, cols):
            v = m[i][j]
            if v != 0 and (best is None or abs(v) < abs(best[0])):
                best = (v, i, j)
                if abs(v) == 1:
                    return best
    return best


def snf(matrix: IntMatrix) -> SnfResult:
    """Smith normal form with transforms, deterministic for a fixed input.

    Pivoting always selects the smallest-magnitude nonzero entry of the
    remaining block (ties resolved by position), which keeps intermediate
    coefficients small without modular arithmetic.
    """
    if matrix.is_zero():
        raise ZeroMatrixError("zero matrix")
    rows, cols = matrix.rows, matrix.cols
    m = [list(r) for r in matrix.entries]
    left = [list(r) for r in IntMatrix.identity(rows).entries]
    right = [list(r) for r in IntMatrix.identity(cols).entries]

    k = 0
    while True:
        piv = _pivot_position(m, k, rows, cols)
        if piv is None:
            break
        _, pi, pj = piv
        if pi != k:
            _swap_rows(m, k, pi)
            _swap_rows(left, k, pi)
        if pj != k:
            for r in m:
                r[k], r[pj] = r[pj], r[k]
            _swap_rows(right, k, pj)  # column swap of `right` done on its transpose form

        # `right` is kept as a row-list of the transposed accumulator; see below.
        while True:
            # Clear the pivot column.
            changed = False
            for i in range(k + 1, rows):
                if m[i][k] != 0:
                    q = m[i][k] // m[k][k]
                    if q:
                        for j in range(cols):
                            m[i][j] -= q * m[k][j]
                        for j in range(rows):
                            left[i][j] -= q * left[k][j]
                    if m[i][k] != 0:
                        _swap_rows(m, k, i)
                        _swap_rows(left, k, i)
                        changed = True
            # Clear the pivot row.
            for j in range(k + 1, cols):
                if m[k][j] != 0:
                    q = m[k][j] // m[k][k]
                    if q:
                        for i in range(rows):
                            m[i][j] -= q * m[i][k]
                        for i in range(cols):
                            right[j][i] -= q * right[k][i]
                    if m[k][j] != 0:
                        for r in m:
                            r[k], r[j] = r[j], r[k]
                        _swap_rows(right, k, j)
                        changed = True
            if not changed:
                break
        k += 1
        if k >= min(rows, cols):
            break

    rank = k
    # Enforce the divisibility chain d_i | d_{i+1}.
    i = 0
    while i < rank - 1:
        a, b = m[i][i], m[i + 1][i + 1]
        if b % a != 0:
            # Add column i+1 to column i, then redo the 2x2 block by gcd steps.
            for r in m:
                r[i] += r[i + 1]
            for j in range(cols):
                right[i][j] += right[i + 1][j]
            _clear_two_by_two(m, left, right, i, rows, cols)
            i = max(i - 1, 0)
        else:
            i += 1

    # Positive diagonal.
    for i in range(rank):
        if m[i][i] < 0:
            for j in range(cols):
                m[i][j] = -m[i][j]
            for j in range(rows):
                left[i][j] = -left[i][j]

    diag = tuple(m[i][i] for i in range(rank))
    return SnfResult(diag, IntMatrix.from_rows(left), IntMatrix.from_rows(right).transpose())


def _clear_two_by_two(m, left, right, k, rows, cols):
    """Re-diagonalize after a divisibility fixup, pivoting at (k, k)."""
    while True:
        piv = _pivot_position(m, k, rows, cols)
        _, pi, pj = piv
        if pi != k:
            _swap_rows(m, k, pi)
            _swap_rows(left, k, pi)
        if pj != k:
            for r in m:
                r[k], r[pj] = r[pj], r[k]
            _swap_rows(right, k, pj)
        done = True
        for i in range(k + 1, rows):
            while m[i][k] != 0:
                q = m[i][k] // m[k][k]
                for j in range(cols):
                    m[i][j] -= q * m[k][j]
                for j in range(rows):
                    left[i][j] -= q * left[k][j]
                if m[i][k] != 0:
                    _swap_rows(m, k, i)
                    _swap_rows(left, k, i)
                    done = False
        for j in range(k + 1, cols):
            while m[k][j] != 0:
                q = m[k][j] // m[k][k]
                for i in range(rows):
                    m[i][j] -= q * m[i][k]
                for i in range(cols):
                    right[j][i] -= q * right[k][i]
                if m[k][j] != 0:
                    for r in m:
                        r[k], r[j] = r[j], r[k]
                    _swap_rows(right, k, j)
                    done = False
        if done:
            return


def invariant_factors(matrix: IntMatrix) -> tuple[int, ...]:
    return snf(matrix).diag


def rank(matrix: IntMatrix) -> int:
    if matrix.is_zero():
        return 0
    return snf(matrix).rank


def delta_r(matrix: IntMatrix, r: int) -> int:
    """gcd of all nonzero r x r minors, read off as a product of invariant factors."""
    result = snf(matrix)
    if not 1 <= r <= result.rank:
        raise ValueError(f"r={r} exceeds rank {result.rank}")
    prod = 1
    for d in result.diag[:r]:
        prod *= d
    return prod


def delta_r_bruteforce(matrix: IntMatrix, r: int) -> int:
    """Test oracle: literal gcd over all r x r sub-determinants. Capped at 6x6 inputs."""
    if matrix.rows > 6 or matrix.cols > 6:
        raise ValueError("brute-force minor gcd capped at 6x6")
    g = 0
    for rsel in itertools.combinations(range(matrix.rows), r):
        for csel in itertools.combinations(range(matrix.cols), r):
            sub = [[matrix.entries[i][j] for j in csel] for i in rsel]
            d = _det(sub)
            g = gcd(g, d)
    if g == 0:
        raise ValueError(f"no nonzero {r}x{r} minor")
    return g


def _det(m) -> int:
    """Fraction-free (Bareiss) determinant of a square int matrix."""
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det(matrix: IntMatrix) -> int:
    if matrix.rows != matrix.cols:
        raise ValueError("determinant needs a square matrix")
    if matrix.rows == 0:
        return 1
    return _det([list(r) for r in matrix.entries])


def lattice_quotient(matrix: IntMatrix) -> LatticeQuotient:
    """Quotient of the ambient row lattice by the column lattice of the matrix."""
    result = snf(matrix)
    torsion = tuple(d for d in result.diag if d > 1)
    return LatticeQuotient(matrix.rows - result.rank, torsion)


def solve_integral(matrix: IntMatrix, b) -> tuple[int, ...] | None:
    """Integer solution x of M x = b, or None when none exists.

    Solved through the Smith form: with L M R = D, x = R y where y is read off
    the transformed right-hand side. The result is verified by substitution.
    """
    b = tuple(int(x) for x in b)
    if len(b) != matrix.rows:
        raise ValueError("dimension mismatch")
    if matrix.is_zero():
        return (0,) * matrix.cols if all(x == 0 for x in b) else None
    result = snf(matrix)
    lb = result.left.mul_vector(b)
    y = []
    for i in range(matrix.cols):
        if i < result.rank:
            d = result.diag[i]
            if lb[i] % d != 0:
                return None
            y.append(lb[i] // d)
        else:
            y.append(0)
    for i in range(result.rank, matrix.rows):
        if lb[i] != 0:
            return None
    x = result.right.mul_vector(y)
    assert matrix.mul_vector(x) == b
    return x


def in_column_lattice(matrix: IntMatrix, b) -> bool:
    return solve_integral(matrix, b) is not None


def vector_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v, preserve_sign: bool = False) -> tuple[int, ...]:
    """Divide by the gcd of the entries; first nonzero entry made positive
    unless the caller needs the orientation kept (facet normals)."""
    v = tuple(int(x) for x in v)
    g = vector_gcd(v)
    if g == 0:
        raise ValueError("zero vector")
    w = tuple(x // g for x in v)
    if not preserve_sign:
        lead = next(x for x in w if x != 0)
        if lead < 0:
            w = tuple(-x for x in w)
    return w


def matrix_rank(rows) -> int:
    """Rank of a list of integer vectors, by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                a, b = m[r][c], m[i][c]
                g = gcd(a, b)
                ma, mb = b // g, a // g
                row = [mb * m[i][j] - ma * m[r][j] for j in range(ncols)]
                m[i] = row
        r += 1
        if r == len(m):
            break
    return r
