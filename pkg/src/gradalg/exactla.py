"""Exact scalar fields (Q and F_p) and dense/sparse matrix kernels.

Matrices are numpy arrays: ``dtype=object`` holding ``int``/``Fraction``
over Q, ``int64`` residues over F_p.  All routines go through a
:class:`Field`, which knows how to canonicalise entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re

import numpy as np

from .errors import FieldMismatch, ShapeError

# residues are multiplied in int64; keep p^2 * (a few million) below 2^63
MAX_PRIME = 1 << 20


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _qnorm(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    return int(x)


@dataclass(frozen=True)
class Field:
    """Q when ``p == 0``, otherwise the prime field F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p:
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.p >= MAX_PRIME:
                raise ValueError(f"prime {self.p} too large (limit {MAX_PRIME})")

    @classmethod
    def rational(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = str(text).strip()
        if t.upper() in ("Q", "QQ", "RATIONAL"):
            return cls(0)
        m = re.fullmatch(r"(?:F|GF|F_)\(?(\d+)\)?", t, re.IGNORECASE)
        if not m:
            raise ValueError(f"unrecognised field {text!r} (use 'Q' or 'F<p>')")
        return cls(int(m.group(1)))

    @property
    def kind(self) -> str:
        return "Prime" if self.p else "Rational"

    @property
    def char(self) -> int:
        return self.p

    @property
    def dtype(self):
        return np.int64 if self.p else object

    def __str__(self):
        return f"F{self.p}" if self.p else "Q"

    # scalars

    def __call__(self, x):
        if self.p:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError(f"{x} has no image in F{self.p}")
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        if isinstance(x, str):
            return _qnorm(Fraction(x))
        if isinstance(x, (np.integer,)):
            return int(x)
        return _qnorm(Fraction(x))

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p:
            return pow(int(x), -1, self.p)
        return _qnorm(1 / Fraction(x))

    def elements(self):
        if not self.p:
            raise ValueError("Q is infinite")
        return range(self.p)

    # arrays

    def reduce(self, arr):
        if self.p:
            return arr % self.p
        return arr

    def array(self, data) -> np.ndarray:
        if self.p:
            a = np.array(data, dtype=object)
            out = np.empty(a.shape, dtype=np.int64)
            flat = out.reshape(-1)
            for i, x in enumerate(a.reshape(-1)):
                flat[i] = self(x)
            return out
        a = np.array(data, dtype=object)
        flat = a.reshape(-1)
        for i, x in enumerate(flat):
            flat[i] = self(x)
        return a

    def zeros(self, shape) -> np.ndarray:
        if self.p:
            return np.zeros(shape, dtype=np.int64)
        a = np.empty(shape, dtype=object)
        a.fill(0)
        return a

    def eye(self, n: int) -> np.ndarray:
        a = self.zeros((n, n))
        for i in range(n):
            a[i, i] = 1
        return a

    def matmul(self, a, b) -> np.ndarray:
        return self.reduce(a @ b)

    def is_zero(self, arr) -> bool:
        return not np.any(np.asarray(arr) != 0)

    # elimination

    def rref(self, a):
        """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
        A = np.array(a, dtype=self.dtype, copy=True)
        if A.ndim != 2:
            raise ShapeError("rref expects a 2-d array")
        m, n = A.shape
        pivots = []
        r = 0
        for c in range(n):
            if r == m:
                break
            nz = np.flatnonzero(A[r:, c] != 0)
            if nz.size == 0:
                continue
            k = r + int(nz[0])
            if k != r:
                A[[r, k]] = A[[k, r]]
            piv = A[r, c]
            if piv != 1:
                A[r, c:] = self.reduce(A[r, c:] * self.inv(piv))
            col = A[:, c].copy()
            col[r] = 0
            rows = np.flatnonzero(col != 0)
            if rows.size:
                A[rows, c:] = self.reduce(A[rows, c:] - np.outer(col[rows], A[r, c:]))
            pivots.append(c)
            r += 1
        return A[:r], pivots

    def rank(self, a) -> int:
        a = np.asarray(a)
        if a.size == 0:
            return 0
        # eliminate along the shorter side
        if a.shape[0] > a.shape[1]:
            a = a.T
        return len(self.rref(a)[1])

    def nullspace(self, a) -> np.ndarray:
        """Columns form a basis of {x : a x = 0}."""
        a = np.asarray(a)
        n = a.shape[1]
        if a.shape[0] == 0:
            return self.eye(n)
        R, pivots = self.rref(a)
        free = [c for c in range(n) if c not in set(pivots)]
        out = self.zeros((n, len(free)))
        for j, f in enumerate(free):
            out[f, j] = 1
            for i, pc in enumerate(pivots):
                if R[i, f] != 0:
                    out[pc, j] = self.reduce(-R[i, f])
        return out

    def solve(self, a, b):
        """Some x with a x = b, or None if inconsistent."""
        a = np.asarray(a)
        b = np.asarray(b)
        vec = b.ndim == 1
        if vec:
            b = b.reshape(-1, 1)
        if a.shape[0] != b.shape[0]:
            raise ShapeError(f"row mismatch {a.shape} vs {b.shape}")
        n = a.shape[1]
        aug = np.concatenate([np.asarray(a, dtype=self.dtype), np.asarray(b, dtype=self.dtype)], axis=1)
        R, pivots = self.rref(aug)
        if pivots and pivots[-1] >= n:
            return None
        x = self.zeros((n, b.shape[1]))
        for i, pc in enumerate(pivots):
            x[pc] = R[i, n:]
        return x[:, 0] if vec else x

    def colspace(self, a) -> np.ndarray:
        """Basis (as columns, reduced form) of the column span of a."""
        a = np.asarray(a)
        if a.size == 0:
            return self.zeros((a.shape[0], 0))
        R, _ = self.rref(a.T)
        return np.ascontiguousarray(R.T)

    def independent_columns(self, a):
        """Indices of a maximal independent subset of the columns of a."""
        a = np.asarray(a)
        if a.size == 0:
            return []
        return self.rref(a)[1]

    def extend(self, sub, vecs):
        """Indices of columns of vecs that extend span(sub) to span(sub, vecs)."""
        k = sub.shape[1]
        _, piv = self.rref(np.concatenate([sub, vecs], axis=1))
        return [c - k for c in piv if c >= k]

    def in_span(self, basis, v) -> bool:
        if basis.shape[1] == 0:
            return self.is_zero(v)
        v = np.asarray(v)
        if v.ndim == 1:
            v = v.reshape(-1, 1)
        return self.rank(np.concatenate([basis, v], axis=1)) == self.rank(basis)

    def intersect(self, u, w) -> np.ndarray:
        """Basis of span(u) ∩ span(w)."""
        if u.shape[1] == 0 or w.shape[1] == 0:
            return self.zeros((u.shape[0], 0))
        ker = self.nullspace(np.concatenate([u, self.reduce(-w)], axis=1))
        return self.colspace(self.matmul(u, ker[: u.shape[1]]))


# dense Mat front end ---------------------------------------------------------


@dataclass(frozen=True)
class Mat:
    field: Field
    data: np.ndarray

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Mat":
        data = field.array(rows)
        if data.ndim == 1:
            data = data.reshape(len(rows), -1) if len(rows) else field.zeros((0, 0))
        return cls(field, data)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __matmul__(self, other: "Mat") -> "Mat":
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.cols != other.rows:
            raise ShapeError(f"{self.data.shape} @ {other.data.shape}")
        return Mat(self.field, self.field.matmul(self.data, other.data))

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.field == other.field
                and self.data.shape == other.data.shape
                and not np.any(self.data != other.data))

    def __hash__(self):
        return hash((self.field, self.data.shape))

    def tolist(self):
        return self.data.tolist()


def _check_fields(*mats):
    fields = {m.field for m in mats}
    if len(fields) > 1:
        raise FieldMismatch("matrices over different fields: " + ", ".join(sorted(map(str, fields))))


def mat_rank(m: Mat) -> int:
    return m.field.rank(m.data)


def mat_nullspace(m: Mat) -> Mat:
    return Mat(m.field, m.field.nullspace(m.data))


def mat_solve(m: Mat, b: Mat):
    _check_fields(m, b)
    if m.rows != b.rows:
        raise ShapeError(f"m has {m.rows} rows, b has {b.rows}")
    x = m.field.solve(m.data, b.data)
    return None if x is None else Mat(m.field, x)


# sparse elimination ----------------------------------------------------------


def _axpy(F, row, c, other):
    """row -= c * other, in place, dropping zeros."""
    p = F.p
    for k, v in other.items():
        nv = row.get(k, 0) - c * v
        if p:
            nv %= p
        if nv:
            row[k] = nv
        else:
            row.pop(k, None)


def sparse_echelon(F: Field, rows):
    """Fully reduced echelon form of sparse rows (dicts col -> value).

    Returns a dict pivot column -> reduced row with pivot coefficient 1.
    """
    pivot_rows = {}
    order = []
    index = {}
    for raw in rows:
        row = {k: v for k, v in raw.items() if v != 0}
        while row:
            hits = [k for k in row if k in pivot_rows]
            if not hits:
                break
            k = min(hits, key=index.__getitem__)
            _axpy(F, row, row[k], pivot_rows[k])
        if not row:
            continue
        c = max(row)
        inv = F.inv(row[c])
        if inv != 1:
            row = {k: F.reduce(v * inv) if F.p else _qnorm(Fraction(v) * inv) for k, v in row.items()}
        index[c] = len(order)
        order.append(c)
        pivot_rows[c] = row
    # back substitution, newest first
    for c in reversed(order):
        row = pivot_rows[c]
        for k in [k for k in row if k != c and k in pivot_rows]:
            if k in row:
                _axpy(F, row, row[k], pivot_rows[k])
    return pivot_rows


def sparse_rank(F: Field, rows) -> int:
    return len(sparse_echelon(F, rows))


def sparse_nullspace(F: Field, rows, ncols: int):
    """Basis of the solution space, each vector as a dense list."""
    piv = sparse_echelon(F, rows)
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        v = [0] * ncols
        v[f] = 1
        for c, row in piv.items():
            if f in row:
                v[c] = F.reduce(-row[f]) if F.p else -row[f]
        basis.append(v)
    return basis
