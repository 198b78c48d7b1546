"""Exact sparse linear algebra over the rationals.

Matrices are stored column-wise: column ``j`` is a dict ``{row: value}``
holding only nonzero entries.  Entries are Python ``int`` or
``fractions.Fraction``; both compare and hash consistently, so equality of
matrices is plain dict equality.

Row reduction works on lists of sparse row dicts and keeps the echelon form
fully reduced, which makes nullspaces cheap to read off.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

Row = dict[int, Rational]


def _norm(x: Rational) -> Rational:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class Matrix:
    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Sequence[Row] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if cols is None:
            self.cols = tuple({} for _ in range(ncols))
        else:
            if len(cols) != ncols:
                raise ValueError("column count mismatch")
            self.cols = tuple({r: _norm(v) for r, v in c.items() if v != 0} for c in cols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, [{j: 1} for j in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> Matrix:
        return cls(nrows, ncols)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational]]) -> Matrix:
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        cols = [{r: rows[r][c] for r in range(nrows) if rows[r][c] != 0} for c in range(ncols)]
        return cls(nrows, ncols, cols)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Row]) -> Matrix:
        return cls(nrows, len(columns), columns)

    @classmethod
    def diagonal(cls, entries: Sequence[Rational]) -> Matrix:
        return cls(len(entries), len(entries), [{j: v} for j, v in enumerate(entries)])

    def to_rows(self) -> list[list[Rational]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                out[r][c] = v
        return out

    def row_dicts(self) -> list[Row]:
        rows: list[Row] = [{} for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                rows[r][c] = v
        return rows

    def __getitem__(self, rc: tuple[int, int]) -> Rational:
        r, c = rc
        return self.cols[c].get(r, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.cols == other.cols

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, tuple(tuple(sorted(c.items())) for c in self.cols)))

    def __repr__(self) -> str:
        return f"Matrix({self.to_rows()!r})"

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return not any(self.cols)

    def apply(self, vec: Row) -> Row:
        """Multiply by a sparse column vector."""
        out: Row = {}
        for k, x in vec.items():
            for r, v in self.cols[k].items():
                s = out.get(r, 0) + v * x
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return {r: _norm(v) for r, v in out.items()}

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix(self.nrows, other.ncols, [self.apply(c) for c in other.cols])

    def _combine(self, other: Matrix, sign: int) -> Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        cols = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            for r, v in b.items():
                s = c.get(r, 0) + sign * v
                if s:
                    c[r] = s
                else:
                    c.pop(r, None)
            cols.append(c)
        return Matrix(self.nrows, self.ncols, cols)

    def __add__(self, other: Matrix) -> Matrix:
        return self._combine(other, 1)

    def __sub__(self, other: Matrix) -> Matrix:
        return self._combine(other, -1)

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def scale(self, x: Rational) -> Matrix:
        if x == 0:
            return Matrix.zero(self.nrows, self.ncols)
        return Matrix(self.nrows, self.ncols, [{r: v * x for r, v in c.items()} for c in self.cols])

    @property
    def T(self) -> Matrix:
        return Matrix(self.ncols, self.nrows, self.row_dicts())

    def permuted(self, perm: Sequence[int]) -> Matrix:
        """Conjugate by the relabeling old index ``k`` -> new index ``perm[k]``."""
        cols: list[Row] = [{} for _ in range(self.ncols)]
        for c, col in enumerate(self.cols):
            cols[perm[c]] = {perm[r]: v for r, v in col.items()}
        return Matrix(self.nrows, self.ncols, cols)

    def is_monomial(self) -> bool:
        """Each column is zero, a standard basis vector, or fixed (entry 1 on the diagonal)."""
        for col in self.cols:
            if len(col) > 1:
                return False
            for v in col.values():
                if v != 1:
                    return False
        return True

    def rank(self) -> int:
        return len(row_reduce(self.row_dicts())[1])

    def nullspace(self) -> list[Row]:
        return nullspace(self.row_dicts(), self.ncols)

    def trace(self) -> Rational:
        return _norm(sum((self.cols[j].get(j, 0) for j in range(min(self.shape))), 0))

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows


def _axpy(row: Row, x: Rational, other: Row) -> None:
    """row += x * other, in place."""
    for c, v in other.items():
        s = row.get(c, 0) + x * v
        if s:
            row[c] = s
        else:
            del row[c]


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Every stored row has a pivot column with entry 1, and no other stored row
    has a nonzero entry in that column.
    """

    def __init__(self) -> None:
        self.rows: dict[int, Row] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, row: Row) -> Row:
        row = {c: v for c, v in row.items() if v != 0}
        for c in [c for c in row if c in self.rows]:
            x = row.get(c)
            if x:
                _axpy(row, -x, self.rows[c])
        return row

    def add(self, row: Row) -> int | None:
        """Insert a row; return its new pivot column, or None if dependent."""
        row = self.reduce(row)
        if not row:
            return None
        p = min(row)
        inv = Fraction(1) / row[p]
        row = {c: _norm(v * inv) for c, v in row.items()}
        for q, other in self.rows.items():
            x = other.get(p)
            if x:
                _axpy(other, -x, row)
        self.rows[p] = row
        return p

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)

    def sorted_rows(self) -> list[Row]:
        return [self.rows[p] for p in sorted(self.rows)]


def row_reduce(rows: Iterable[Row]) -> tuple[list[Row], list[int]]:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    pivots = sorted(ech.rows)
    return [ech.rows[p] for p in pivots], pivots


def nullspace(rows: Iterable[Row], ncols: int) -> list[Row]:
    """Basis of {x : row . x = 0 for every row}, one vector per free column."""
    reduced, pivots = row_reduce(rows)
    pivset = set(pivots)
    by_free: dict[int, Row] = {f: {f: 1} for f in range(ncols) if f not in pivset}
    for p, r in zip(pivots, reduced):
        for f, v in r.items():
            if f != p:
                by_free[f][p] = _norm(-v)
    return [by_free[f] for f in sorted(by_free)]


def span_rank(vectors: Iterable[Row]) -> int:
    return len(row_reduce(vectors)[1])


def solve(matrix: Matrix, rhs: Row) -> Row | None:
    """One solution x of matrix @ x = rhs, or None if inconsistent."""
    aug = matrix.row_dicts()
    n = matrix.ncols
    for r, row in enumerate(aug):
        if rhs.get(r):
            row[n] = rhs[r]
    reduced, pivots = row_reduce(aug)
    if pivots and pivots[-1] == n:
        return None
    return {p: _norm(r.get(n, 0)) for p, r in zip(pivots, reduced) if r.get(n, 0)}


def charpoly(m: Matrix) -> list[Rational]:
    """Coefficients c_0..c_d of det(tI - m), via Faddeev-LeVerrier."""
    d = m.nrows
    coeffs: list[Rational] = [0] * (d + 1)
    coeffs[d] = 1
    mk = Matrix.zero(d, d)
    ident = Matrix.identity(d)
    for k in range(1, d + 1):
        mk = m @ (mk + ident.scale(coeffs[d - k + 1]))
        coeffs[d - k] = _norm(-Fraction(mk.trace()) / k)
    return coeffs


def rational_roots(coeffs: Sequence[Rational]) -> list[Fraction]:
    """Distinct rational roots of sum coeffs[k] t^k."""
    from math import gcd, lcm

    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    roots: list[Fraction] = []
    while cs and cs[0] == 0:
        cs.pop(0)
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(cs) <= 1:
        return roots
    den = lcm(*(c.denominator for c in cs))
    ints = [int(c * den) for c in cs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]

    def divisors(x: int) -> list[int]:
        x = abs(x)
        return [k for k in range(1, x + 1) if x % k == 0]

    for p in divisors(ints[0]):
        for q in divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                val = Fraction(0)
                for c in reversed(ints):
                    val = val * cand + c
                if val == 0:
                    roots.append(cand)
    return sorted(roots)


def fmt(x: Rational) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Rational:
    return _norm(Fraction(s))


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; basis (i, j) -> i * dim(b) + j."""
    cols: list[Row] = []
    for ca in a.cols:
        for cb in b.cols:
            cols.append({ra * b.nrows + rb: va * vb for ra, va in ca.items() for rb, vb in cb.items()})
    return Matrix(a.nrows * b.nrows, a.ncols * b.ncols, cols)


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    cols: list[Row] = []
    r0 = 0
    for m in blocks:
        for c in m.cols:
            cols.append({r + r0: v for r, v in c.items()})
        r0 += m.nrows
    return Matrix(r0, len(cols), cols)


def inverse(m: Matrix) -> Matrix | None:
    """Inverse of a square matrix, or None if singular."""
    n = m.nrows
    if m.ncols != n:
        raise ValueError("not square")
    rows = m.row_dicts()
    for r in range(n):
        rows[r][n + r] = 1
    reduced, pivots = row_reduce(rows)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    inv_rows = [{c - n: v for c, v in reduced[r].items() if c >= n} for r in range(n)]
    cols: list[Row] = [{} for _ in range(n)]
    for r, row in enumerate(inv_rows):
        for c, v in row.items():
            cols[c][r] = v
    return Matrix(n, n, cols)


def column_space(m: Matrix) -> list[Row]:
    """Echelon basis of the span of the columns."""
    return row_reduce(m.cols)[0]
