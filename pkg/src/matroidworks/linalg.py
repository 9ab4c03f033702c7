"""Exact linear algebra over the coefficient fields, plus symbolic minors.

ExactMatrix does Gaussian elimination with exact field arithmetic (no
floating point anywhere). MinorOracle computes determinants of matrices of
polynomials by cofactor expansion, memoized on (rows, columns) so the many
overlapping minors of one parameterized matrix share work.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .errors import InputError, NotSymmetric, RingMismatch
from .fields import Field, RationalField
from .polynomials import Poly, PolynomialRing


class ExactMatrix:
    """Immutable matrix of field elements."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: tuple):
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "ExactMatrix":
        if not rows:
            return cls(field, ())
        width = len(rows[0])
        out = []
        for r in rows:
            if len(r) != width:
                raise InputError("ragged rows in matrix")
            out.append(tuple(field.coerce(v) for v in r))
        return cls(field, tuple(out))

    @classmethod
    def identity(cls, field: Field, n: int) -> "ExactMatrix":
        return cls(
            field,
            tuple(
                tuple(field.one if i == j else field.zero for j in range(n))
                for i in range(n)
            ),
        )

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def column_submatrix(self, cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(
            self.field, tuple(tuple(row[j] for j in cols) for row in self.rows)
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.field,
            tuple(
                tuple(self.rows[i][j] for i in range(self.nrows))
                for j in range(self.ncols)
            ),
        )

    def _echelon(self) -> tuple[list[list], list[int]]:
        """Row-reduce a working copy; returns (rref rows, pivot columns)."""
        f = self.field
        work = [list(r) for r in self.rows]
        pivots: list[int] = []
        row = 0
        for col in range(self.ncols):
            sel = None
            for i in range(row, len(work)):
                if not f.is_zero(work[i][col]):
                    sel = i
                    break
            if sel is None:
                continue
            work[row], work[sel] = work[sel], work[row]
            inv = f.inv(work[row][col])
            work[row] = [f.mul(inv, v) for v in work[row]]
            for i in range(len(work)):
                if i != row and not f.is_zero(work[i][col]):
                    c = work[i][col]
                    work[i] = [
                        f.sub(a, f.mul(c, b)) for a, b in zip(work[i], work[row])
                    ]
            pivots.append(col)
            row += 1
        return work, pivots

    def rank(self) -> int:
        return len(self._echelon()[1])

    def rref(self) -> tuple["ExactMatrix", tuple[int, ...]]:
        work, pivots = self._echelon()
        return ExactMatrix(self.field, tuple(tuple(r) for r in work)), tuple(pivots)

    def kernel_basis(self) -> list[tuple]:
        """Basis of the right kernel, one vector per free column."""
        f = self.field
        work, pivots = self._echelon()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for j in free:
            vec = [f.zero] * self.ncols
            vec[j] = f.one
            for r, pc in enumerate(pivots):
                vec[pc] = f.neg(work[r][j])
            basis.append(tuple(vec))
        return basis

    def solve(self, rhs: Sequence) -> Optional[tuple]:
        """One solution of A x = rhs, or None if inconsistent."""
        f = self.field
        b = [f.coerce(v) for v in rhs]
        if len(b) != self.nrows:
            raise InputError("rhs length mismatch")
        aug = ExactMatrix(
            self.field,
            tuple(tuple(row) + (b[i],) for i, row in enumerate(self.rows)),
        )
        work, pivots = aug._echelon()
        if self.ncols in pivots:
            return None
        x = [f.zero] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = work[r][self.ncols]
        return tuple(x)

    def det(self):
        if self.nrows != self.ncols:
            raise InputError("determinant of a non-square matrix")
        f = self.field
        work = [list(r) for r in self.rows]
        n = self.nrows
        det = f.one
        for col in range(n):
            sel = None
            for i in range(col, n):
                if not f.is_zero(work[i][col]):
                    sel = i
                    break
            if sel is None:
                return f.zero
            if sel != col:
                work[col], work[sel] = work[sel], work[col]
                det = f.neg(det)
            det = f.mul(det, work[col][col])
            inv = f.inv(work[col][col])
            for i in range(col + 1, n):
                if not f.is_zero(work[i][col]):
                    c = f.mul(work[i][col], inv)
                    work[i] = [
                        f.sub(a, f.mul(c, b)) for a, b in zip(work[i], work[col])
                    ]
        return det

    def is_symmetric(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def is_positive_definite(self) -> bool:
        """Sylvester's criterion with exact rational minors."""
        if not isinstance(self.field, RationalField):
            raise InputError("positive definiteness is checked over Q")
        if not self.is_symmetric():
            raise NotSymmetric("matrix is not symmetric")
        if self.nrows == 0:
            return True
        for k in range(1, self.nrows + 1):
            sub = ExactMatrix(
                self.field, tuple(tuple(r[:k]) for r in self.rows[:k])
            )
            if sub.det() <= 0:
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols} over {self.field!r})"


class MinorOracle:
    """Cofactor-expansion determinants of a fixed grid of polynomials.

    The grid is a list of rows of Poly over one ring.  det(cols) expands
    along the first listed column, memoizing every (rows, cols) subproblem;
    distinct maximal minors of one matrix share most of their recursion tree.
    """

    def __init__(self, grid: Sequence[Sequence[Poly]]):
        if not grid:
            raise InputError("empty grid")
        self.ring: PolynomialRing = grid[0][0].ring
        for row in grid:
            for p in row:
                if p.ring != self.ring:
                    raise RingMismatch("grid entries over different rings")
        self.grid = [list(row) for row in grid]
        self._memo: dict[tuple, Poly] = {}

    def det(self, cols: Sequence[int], rows: Optional[Sequence[int]] = None) -> Poly:
        rows = tuple(rows) if rows is not None else tuple(range(len(self.grid)))
        cols = tuple(cols)
        if len(rows) != len(cols):
            raise InputError("minor needs equally many rows and columns")
        return self._det(rows, cols)

    def _det(self, rows: tuple, cols: tuple) -> Poly:
        if not rows:
            return self.ring.one()
        key = (rows, cols)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        c0 = cols[0]
        rest = cols[1:]
        acc = self.ring.zero()
        for k, r in enumerate(rows):
            entry = self.grid[r][c0]
            if entry.is_zero():
                continue
            sub = self._det(rows[:k] + rows[k + 1 :], rest)
            if sub.is_zero():
                continue
            term = entry * sub
            acc = acc + (term if k % 2 == 0 else -term)
        self._memo[key] = acc
        return acc


def leading_principal_minors(m: ExactMatrix) -> list:
    """The n leading principal minors (used by tests against the PD check)."""
    return [
        ExactMatrix(m.field, tuple(tuple(r[:k]) for r in m.rows[:k])).det()
        for k in range(1, m.nrows + 1)
    ]
