"""Dense exact matrices over Q(i)(s).

Matrices act on column vectors.  Column ``j`` of an operator holds the
coordinates of the image of the j-th basis vector.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from flint import fmpq, fmpq_mat

from .scalars import ONE, ZERO, ExactScalar, as_scalar, eval_at_s, render

__all__ = ["Matrix", "block_diag", "rank_at", "span_rank"]


class Matrix:
    """Immutable-by-convention dense matrix of :class:`ExactScalar`."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [[as_scalar(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def _raw(cls, rows):
        m = cls.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = len(rows[0]) if rows else 0
        return m

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Matrix":
        m = n if m is None else m
        return cls._raw([[ZERO] * m for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([ONE] * n)

    @classmethod
    def diag(cls, entries: Iterable) -> "Matrix":
        entries = [as_scalar(e) for e in entries]
        n = len(entries)
        out = cls.zeros(n)
        for j, e in enumerate(entries):
            out.rows[j][j] = e
        return out

    @classmethod
    def column(cls, entries: Iterable) -> "Matrix":
        return cls([[e] for e in entries])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def col(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def copy(self) -> "Matrix":
        return Matrix._raw([list(r) for r in self.rows])

    def with_entry(self, i, j, value) -> "Matrix":
        out = self.copy()
        out.rows[i][j] = as_scalar(value)
        return out

    def __add__(self, other):
        if not isinstance(other, Matrix):
            other = as_scalar(other)
            if other is NotImplemented:
                return other
            other = Matrix.identity(self.nrows) * other
        self._same_shape(other)
        return Matrix._raw(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    __radd__ = __add__

    def __neg__(self):
        return Matrix._raw([[-a for a in r] for r in self.rows])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            other = as_scalar(other)
            if other is NotImplemented:
                return other
            other = Matrix.identity(self.nrows) * other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, c):
        c = as_scalar(c)
        if c is NotImplemented:
            return c
        return Matrix._raw([[a * c if a else ZERO for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * as_scalar(c).inverse()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.ncols
        out = []
        for r in self.rows:
            acc = [ZERO] * cols
            for k, a in enumerate(r):
                if a.is_zero():
                    continue
                orow = other.rows[k]
                for j in range(cols):
                    b = orow[j]
                    if not b.is_zero():
                        acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix._raw(out)

    def apply(self, vec: Sequence) -> list:
        """Matrix times a coordinate list."""
        return [sum((a * v for a, v in zip(r, vec) if not a.is_zero() and not v.is_zero()), ZERO) for r in self.rows]

    def __pow__(self, n: int) -> "Matrix":
        if n < 0:
            return self.inverse() ** (-n)
        out = Matrix.identity(self.nrows)
        base = self
        while n:
            if n & 1:
                out = out @ base
            n >>= 1
            if n:
                base = base @ base
        return out

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.shape == other.shape and all(
                a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)
            )
        return NotImplemented

    __hash__ = None

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self.rows for a in r)

    def transpose(self) -> "Matrix":
        return Matrix._raw([list(c) for c in zip(*self.rows)])

    def conjugate(self) -> "Matrix":
        return Matrix._raw([[a.conjugate() for a in r] for r in self.rows])

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of non-square matrix")
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        _gauss_jordan(aug, n)
        return Matrix._raw([r[n:] for r in aug])

    def solve(self, rhs: "Matrix") -> "Matrix":
        """Solve ``self @ X = rhs`` for square invertible ``self``."""
        n = self.nrows
        aug = [list(r) + list(b) for r, b in zip(self.rows, rhs.rows)]
        _gauss_jordan(aug, n)
        return Matrix._raw([r[n:] for r in aug])

    def nonzero_entries(self):
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if not a.is_zero():
                    yield i, j, a

    def first_nonzero(self):
        """Render the first nonzero entry, for failure witnesses."""
        for i, j, a in self.nonzero_entries():
            return f"[{i},{j}] = {render(a)}"
        return None

    def __repr__(self):
        body = "; ".join(", ".join(render(a) for a in r) for r in self.rows)
        return f"Matrix([{body}])"


def _gauss_jordan(aug, n):
    rows = len(aug)
    for c in range(n):
        piv = next((r for r in range(c, rows) if not aug[r][c].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [x * inv if not x.is_zero() else x for x in aug[c]]
        for r in range(rows):
            if r != c and not aug[r][c].is_zero():
                f = aug[r][c]
                aug[r] = [x - f * y if not y.is_zero() else x for x, y in zip(aug[r], aug[c])]


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(b.nrows for b in blocks)
    out = Matrix.zeros(n)
    off = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                out.rows[off + i][off + j] = b.rows[i][j]
        off += b.nrows
    return out


def _realify(vectors, s_value) -> fmpq_mat:
    # a complex vector v = x + i y is sent to the real rows (x, -y) and (y, x),
    # so the rank over Q equals twice the rank over Q(i)
    rows = []
    for v in vectors:
        vals = [eval_at_s(a, s_value) for a in v]
        rows.append([c.re for c in vals] + [-c.im for c in vals])
        rows.append([c.im for c in vals] + [c.re for c in vals])
    m = len(rows[0])
    flat = [fmpq(x.numerator, x.denominator) for r in rows for x in r]
    return fmpq_mat(len(rows), m, flat)


def rank_at(vectors: Sequence[Sequence[ExactScalar]], s_value=Fraction(3, 2)) -> int:
    """Rank over Q(i) of the vectors specialized at s = s_value.

    The specialized rank never exceeds the generic rank over Q(i)(s), so a
    full specialized rank certifies full generic rank.
    """
    if not vectors:
        return 0
    _, r = _realify(vectors, s_value).rref()
    return r // 2


def span_rank(matrices: Sequence[Matrix], s_value=Fraction(3, 2)) -> int:
    """Dimension of the linear span of ``matrices`` (specialized, see rank_at)."""
    return rank_at([[a for r in m.rows for a in r] for m in matrices], s_value)
