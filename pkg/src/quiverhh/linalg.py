"""Exact dense linear algebra over the rationals or a prime field.

Everything in this module is deterministic: pivots are always the first
row with a nonzero entry in the pivot column, particular solutions set
every free variable to zero, and kernel vectors are listed by increasing
free-column index.  Coefficients are `fractions.Fraction` or `GFElement`
values; both support the arithmetic operators and truth-testing, so the
elimination code never needs to know which field it is working over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class GFElement:
    """An element of GF(p).  Immutable, normalised to 0 <= v < p."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError("mixed characteristics")
            return other.v
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return GFElement(self.p, self.v + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return GFElement(self.p, self.v - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return GFElement(self.p, v - self.v)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return GFElement(self.p, self.v * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return GFElement(self.p, self.v * pow(v, self.p - 2, self.p))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return GFElement(self.p, v * pow(self.v, self.p - 2, self.p))

    def __neg__(self):
        return GFElement(self.p, -self.v)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} (mod {self.p})"


class Rationals:
    """The field of rationals; elements are Fractions in lowest terms."""

    name = "QQ"

    def one(self):
        return Fraction(1)

    def zero(self):
        return Fraction(0)

    def from_int(self, k):
        return Fraction(k)

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for an odd prime p (characteristic 2 is rejected)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        self.p = p
        self.name = f"GF({p})"

    def one(self):
        return GFElement(self.p, 1)

    def zero(self):
        return GFElement(self.p, 0)

    def from_int(self, k):
        return GFElement(self.p, k)

    def __repr__(self):
        return self.name


QQ = Rationals()


@dataclass
class Matrix:
    """Dense row-major matrix.  len(entries) == rows * cols always."""

    rows: int
    cols: int
    entries: list

    def __post_init__(self):
        assert len(self.entries) == self.rows * self.cols

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_lists(self):
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )


def matrix_from_rows(rows, ncols=None, field=QQ):
    if rows:
        ncols = len(rows[0])
    assert ncols is not None, "need ncols for an empty matrix"
    flat = []
    for r in rows:
        assert len(r) == ncols
        flat.extend(field.from_int(x) if isinstance(x, int) else x for x in r)
    return Matrix(len(rows), ncols, flat)


def identity_matrix(n, field=QQ):
    one, zero = field.one(), field.zero()
    return Matrix(n, n, [one if i == j else zero for i in range(n) for j in range(n)])


def _rref_rows(rows, ncols):
    """In-place RREF on a list of row lists.  Returns the pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != 1:
            inv = 1 / piv
            row_r = rows[r]
            for j in range(c, len(row_r)):
                if row_r[j]:
                    row_r[j] = row_r[j] * inv
        row_r = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                row_i = rows[i]
                for j in range(c, len(row_i)):
                    if row_r[j]:
                        row_i[j] = row_i[j] - f * row_r[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m):
    """Reduced row echelon form.  Returns (rref matrix, pivot columns, rank)."""
    rows = m.row_lists()
    pivots = _rref_rows(rows, m.cols)
    flat = [x for row in rows for x in row]
    return Matrix(m.rows, m.cols, flat), tuple(pivots), len(pivots)


def rank(m):
    return rref(m)[2]


def solve(a, b, field=QQ):
    """Particular solution of a*x = b with free variables zero, or None.

    The augmented system is row reduced; a pivot in the constant column
    signals inconsistency.
    """
    assert a.rows == len(b)
    bcol = [field.from_int(x) if isinstance(x, int) else x for x in b]
    rows = [a.row(i) + [bcol[i]] for i in range(a.rows)]
    pivots = _rref_rows(rows, a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        return None
    zero = field.zero()
    x = [zero] * a.cols
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][a.cols]
    return x


def kernel_basis(a, field=QQ):
    """Basis of the right kernel, one vector per free column, in order."""
    red, pivots, rk = rref(a)
    pivot_set = set(pivots)
    free = [c for c in range(a.cols) if c not in pivot_set]
    zero, one = field.zero(), field.one()
    basis = []
    for fc in free:
        v = [zero] * a.cols
        v[fc] = one
        for i, pc in enumerate(pivots):
            coeff = red[i, fc]
            if coeff:
                v[pc] = -coeff
        basis.append(v)
    return basis


def mat_vec(a, x, field=QQ):
    zero = field.zero()
    out = []
    for i in range(a.rows):
        row = a.row(i)
        acc = zero
        for j, xj in enumerate(x):
            if row[j] and xj:
                acc = acc + row[j] * xj
        out.append(acc)
    return out


class LinearSolver:
    """Row reduce a matrix once, then solve many right-hand sides.

    Keeps the transform T with T*A = R (R the RREF), so each solve is a
    matrix-vector product plus a consistency check.  Free variables are
    always zero, matching `solve`.
    """

    def __init__(self, a, field=QQ):
        self.field = field
        self.nrows = a.rows
        self.ncols = a.cols
        one, zero = field.one(), field.zero()
        rows = [
            a.row(i) + [one if k == i else zero for k in range(a.rows)]
            for i in range(a.rows)
        ]
        pivots = _rref_rows(rows, a.cols)  # reduce on the A-part only
        self.pivots = pivots
        self.rank = len(pivots)
        self.transform = [row[a.cols :] for row in rows]

    def solve(self, b):
        """Solution with zeroed free variables, or None if inconsistent."""
        zero = self.field.zero()
        y = []
        for trow in self.transform:
            acc = zero
            for j, t in enumerate(trow):
                if t and b[j]:
                    acc = acc + t * b[j]
            y.append(acc)
        for i in range(self.rank, self.nrows):
            if y[i]:
                return None
        x = [zero] * self.ncols
        for i, pc in enumerate(self.pivots):
            x[pc] = y[i]
        return x
