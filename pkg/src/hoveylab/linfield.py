"""Exact linear algebra over prime fields F_p.

Everything downstream (modules, Ext groups, witness checks) reduces to the
operations in this file, so they are deliberately boring: dense int64 numpy
arrays with canonical representatives 0..p-1 and Gaussian elimination with
first-nonzero pivoting.  No floats anywhere.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .errors import MalformedInputError

_SMALL_PRIMES = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
    151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229,
    233, 239, 241, 251,
}


class PrimeField:
    """The field F_p for a prime 2 <= p <= 251 (one byte per element)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or p not in _SMALL_PRIMES:
            raise MalformedInputError(f"characteristic must be a prime in [2, 251], got {p!r}")
        self.p = p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"F{self.p}"


class Mat:
    """A rows x cols matrix over a PrimeField; entries canonical in 0..p-1.

    Zero-row / zero-column shapes are first-class citizens: kernels, images
    and zero modules produce them all the time.
    """

    __slots__ = ("field", "a")

    def __init__(self, field: PrimeField, entries):
        a = np.asarray(entries, dtype=np.int64)
        if a.ndim != 2:
            raise MalformedInputError(f"matrix entries must be 2-dimensional, got shape {a.shape}")
        self.field = field
        self.a = a % field.p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> "Mat":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> "Mat":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def from_rows(cls, field: PrimeField, rows: list, cols: Optional[int] = None) -> "Mat":
        if not rows:
            if cols is None:
                raise MalformedInputError("an empty row list needs an explicit column count")
            return cls.zeros(field, 0, cols)
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise MalformedInputError("ragged rows in matrix literal")
        return cls(field, np.asarray(rows, dtype=np.int64))

    # -- basic structure ----------------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def copy(self) -> "Mat":
        return Mat(self.field, self.a.copy())

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and other.field == self.field
            and other.a.shape == self.a.shape
            and np.array_equal(other.a, self.a)
        )

    def __hash__(self):  # content hash, matrices are immutable by convention
        return hash((self.field.p, self.a.shape, self.a.tobytes()))

    def __repr__(self):
        return f"Mat({self.field}, {self.a.tolist()})"

    def is_zero(self) -> bool:
        return not self.a.any()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat(self.field, self.a + other.a)

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_same_shape(other)
        return Mat(self.field, self.a - other.a)

    def __neg__(self) -> "Mat":
        return Mat(self.field, -self.a)

    def __matmul__(self, other: "Mat") -> "Mat":
        if other.field != self.field:
            raise IncompatibleFields(self, other)
        if self.cols != other.rows:
            raise MalformedInputError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        # entries < 251 and inner dims stay tiny, so int64 cannot overflow
        return Mat(self.field, self.a @ other.a)

    def scale(self, c: int) -> "Mat":
        return Mat(self.field, self.a * (c % self.field.p))

    def transpose(self) -> "Mat":
        return Mat(self.field, self.a.T)

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise MalformedInputError("hstack row mismatch")
        return Mat(self.field, np.hstack([self.a, other.a]))

    def vstack(self, other: "Mat") -> "Mat":
        if self.cols != other.cols:
            raise MalformedInputError("vstack column mismatch")
        return Mat(self.field, np.vstack([self.a, other.a]))

    def _check_same_shape(self, other: "Mat"):
        if other.field != self.field or other.a.shape != self.a.shape:
            raise MalformedInputError("shape or field mismatch")

    # -- elimination --------------------------------------------------------

    def rref(self) -> tuple["Mat", list[int]]:
        """Reduced row echelon form with the list of pivot columns.

        First nonzero pivot in each column, fully reduced above and below;
        deterministic for reproducible reports.
        """
        p = self.field.p
        r = self.a.copy()
        pivots: list[int] = []
        row = 0
        m, n = r.shape
        for col in range(n):
            if row == m:
                break
            nz = np.nonzero(r[row:, col])[0]
            if nz.size == 0:
                continue
            piv = row + int(nz[0])
            if piv != row:
                r[[row, piv]] = r[[piv, row]]
            inv = pow(int(r[row, col]), p - 2, p)
            r[row] = (r[row] * inv) % p
            mask = np.nonzero(r[:, col])[0]
            for i in mask:
                if i != row:
                    r[i] = (r[i] - r[i, col] * r[row]) % p
            pivots.append(col)
            row += 1
        return Mat(self.field, r), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def right_kernel(self) -> "Mat":
        """Basis of the right null space, one basis vector per column."""
        red, pivots = self.rref()
        n = self.cols
        free = [c for c in range(n) if c not in pivots]
        k = Mat.zeros(self.field, n, len(free))
        p = self.field.p
        for j, fc in enumerate(free):
            k.a[fc, j] = 1
            for i, pc in enumerate(pivots):
                k.a[pc, j] = (-red.a[i, fc]) % p
        return k

    def left_kernel(self) -> "Mat":
        """Basis of the left null space, one basis vector per row."""
        return self.transpose().right_kernel().transpose()

    def solve(self, b: "Mat") -> Optional["Mat"]:
        """One exact solution x of self @ x = b, or None if inconsistent.

        Accepts a matrix right-hand side (solves column by column in one
        elimination pass).
        """
        if b.rows != self.rows:
            raise MalformedInputError("right-hand side row mismatch")
        if b.field != self.field:
            raise MalformedInputError("field mismatch in solve")
        aug = self.hstack(b)
        red, pivots = aug.rref()
        n = self.cols
        if any(c >= n for c in pivots):
            return None
        x = Mat.zeros(self.field, n, b.cols)
        for i, c in enumerate(pivots):
            x.a[c, :] = red.a[i, n:]
        return x

    def inverse(self) -> Optional["Mat"]:
        if self.rows != self.cols:
            return None
        x = self.solve(Mat.identity(self.field, self.rows))
        if x is None:
            return None
        if not np.array_equal((self.a @ x.a) % self.field.p, np.eye(self.rows, dtype=np.int64)):
            return None
        return x

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def column_space_basis(self) -> "Mat":
        """The pivot columns of self: a deterministic basis of the image."""
        _, pivots = self.rref()
        return Mat(self.field, self.a[:, pivots] if pivots else np.zeros((self.rows, 0), dtype=np.int64))


class IncompatibleFields(MalformedInputError):
    def __init__(self, a: Mat, b: Mat):
        super().__init__(f"matrices over different fields: {a.field} vs {b.field}")


def rank_kernel(m: Mat) -> tuple[int, Mat]:
    """Rank and a right-kernel basis; rank + kernel columns = cols."""
    red_rank = m.rank()
    ker = m.right_kernel()
    assert red_rank + ker.cols == m.cols
    return red_rank, ker


def solve_linear(m: Mat, b: Mat) -> Optional[Mat]:
    """One solution of m @ x = b, or None; the result verifies exactly."""
    x = m.solve(b)
    if x is not None:
        assert (m @ x) == b
    return x


def vec(m: Mat) -> np.ndarray:
    """Row-major flattening, matching the kron conventions used below."""
    return m.a.reshape(-1)


def kron_left(a: Mat, cols: int) -> np.ndarray:
    """Matrix of X -> a @ X on row-major vec(X), X with `cols` columns."""
    return np.kron(a.a, np.eye(cols, dtype=np.int64))


def kron_right(b: Mat, rows: int) -> np.ndarray:
    """Matrix of X -> X @ b on row-major vec(X), X with `rows` rows."""
    return np.kron(np.eye(rows, dtype=np.int64), b.a.T)
