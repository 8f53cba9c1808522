"""Exact linear algebra over Q and prime fields.

Field elements are plain Python values: ``Fraction`` for the rationals and
``int`` residues in ``[0, q)`` for GF(q).  A :class:`Field` coerces inputs and
carries the arithmetic; :class:`Matrix`, :class:`ProjectivePoint` and
:class:`Configuration` are immutable and remember their field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import lcm

from .errors import BadField, BadIndex, FieldMismatch, SizeMismatch, ZeroPoint


def is_prime(q):
    if not isinstance(q, int) or q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``q is None``) or the prime field GF(q)."""

    q: int | None = None

    def __post_init__(self):
        if self.q is not None and not is_prime(self.q):
            raise BadField(f"{self.q} is not prime")

    @property
    def is_rational(self):
        return self.q is None

    def __call__(self, x):
        if isinstance(x, float):
            raise TypeError("floats are not exact field elements")
        if self.q is None:
            return Fraction(x)
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.q == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.q})")
            return x.numerator * pow(x.denominator, -1, self.q) % self.q
        return int(x) % self.q

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def add(self, a, b):
        return a + b if self.q is None else (a + b) % self.q

    def sub(self, a, b):
        return a - b if self.q is None else (a - b) % self.q

    def mul(self, a, b):
        return a * b if self.q is None else (a * b) % self.q

    def neg(self, a):
        return -a if self.q is None else (-a) % self.q

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.q is None else pow(a, -1, self.q)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        if self.q is None:
            raise BadField("the rationals are not enumerable")
        return range(self.q)

    def __str__(self):
        return "QQ" if self.q is None else f"GF({self.q})"


QQ = Field()


def GF(q):
    return Field(q)


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(self.field(x) for x in row) for row in self.rows)
        if len({len(r) for r in rows}) > 1:
            raise SizeMismatch("ragged matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_columns(cls, columns, field=QQ):
        columns = [tuple(c) for c in columns]
        if not columns:
            raise SizeMismatch("no columns")
        n = len(columns[0])
        return cls(field, tuple(tuple(c[i] for c in columns) for i in range(n)))

    @classmethod
    def identity(cls, n, field=QQ):
        return cls(field, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, r, c, field=QQ):
        return cls(field, ((0,) * c,) * r)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    @property
    def columns(self):
        return tuple(self.column(j) for j in range(self.ncols))

    def submatrix(self, cols):
        return Matrix(self.field, tuple(tuple(r[j] for j in cols) for r in self.rows))

    def transpose(self):
        return Matrix.from_columns(self.rows, self.field)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} @ {other.field}")
        if self.ncols != other.nrows:
            raise SizeMismatch(f"{self.shape} @ {other.shape}")
        F = self.field
        cols = other.columns
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = sum(a * b for a, b in zip(r, c))
                row.append(s if F.q is None else s % F.q)
            out.append(row)
        return Matrix(F, tuple(map(tuple, out)))

    def apply(self, v):
        """Matrix times a column vector given as a sequence."""
        F = self.field
        return tuple(F(sum(a * F(b) for a, b in zip(r, v))) for r in self.rows)

    def det(self):
        if self.nrows != self.ncols:
            raise SizeMismatch("det of a non-square matrix")
        return det(self.rows, self.field)

    def __str__(self):
        return "[" + "; ".join(" ".join(str(x) for x in r) for r in self.rows) + "]"


def det(rows, field=QQ):
    """Leibniz determinant; meant for the tiny matrices used in this package."""
    k = len(rows)
    total = 0
    for perm in permutations(range(k)):
        sign = _perm_sign(perm)
        term = sign
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return field(total)


def _perm_sign(perm):
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def rank(M):
    """Exact rank by Gaussian elimination with full pivoting."""
    if not isinstance(M, Matrix):
        raise TypeError("rank expects a Matrix")
    if M.nrows == 0 or M.ncols == 0:
        return 0
    if M.field.q is None:
        return _rank_integer(_clear_denominators(M.rows))
    return _rank_mod(M.rows, M.field.q)


def _clear_denominators(rows):
    out = []
    for r in rows:
        den = lcm(*(x.denominator for x in r))
        out.append([int(x * den) for x in r])
    return out


def _full_pivot(a, k, nr, nc):
    for i in range(k, nr):
        row = a[i]
        for j in range(k, nc):
            if row[j]:
                return i, j
    return None


def _rank_integer(a):
    # fraction-free (Bareiss) elimination on integer rows
    nr, nc = len(a), len(a[0])
    prev = 1
    for k in range(min(nr, nc)):
        piv = _full_pivot(a, k, nr, nc)
        if piv is None:
            return k
        i, j = piv
        a[k], a[i] = a[i], a[k]
        if j != k:
            for row in a:
                row[k], row[j] = row[j], row[k]
        p = a[k][k]
        for i in range(k + 1, nr):
            ri, rk = a[i], a[k]
            f = ri[k]
            for j in range(k + 1, nc):
                ri[j] = (ri[j] * p - f * rk[j]) // prev
            ri[k] = 0
        prev = p
    return min(nr, nc)


def _rank_mod(rows, q):
    a = [list(r) for r in rows]
    nr, nc = len(a), len(a[0])
    for k in range(min(nr, nc)):
        piv = _full_pivot(a, k, nr, nc)
        if piv is None:
            return k
        i, j = piv
        a[k], a[i] = a[i], a[k]
        if j != k:
            for row in a:
                row[k], row[j] = row[j], row[k]
        inv = pow(a[k][k], -1, q)
        rk = a[k]
        for i in range(k + 1, nr):
            ri = a[i]
            f = ri[k] * inv % q
            if f:
                for j in range(k, nc):
                    ri[j] = (ri[j] - f * rk[j]) % q
    return min(nr, nc)


def rref(M):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    F = M.field
    a = [list(r) for r in M.rows]
    nr, nc = M.shape
    pivots = []
    r = 0
    for c in range(nc):
        i = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if i is None:
            continue
        a[r], a[i] = a[i], a[r]
        inv = F.inv(a[r][c])
        a[r] = [F.mul(x, inv) for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def nullspace(M):
    """Basis of {x : M x = 0} as a list of tuples."""
    F = M.field
    a, pivots = rref(M)
    free = [c for c in range(M.ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [F.zero] * M.ncols
        x[f] = F.one
        for r, c in enumerate(pivots):
            x[c] = F.neg(a[r][f])
        basis.append(tuple(x))
    return basis


def solve(M, b):
    """Some solution x of M x = b, or None when the system is inconsistent."""
    F = M.field
    aug = Matrix(F, tuple(r + (F(bi),) for r, bi in zip(M.rows, b)))
    a, pivots = rref(aug)
    if M.ncols in pivots:
        return None
    x = [F.zero] * M.ncols
    for r, c in enumerate(pivots):
        x[c] = a[r][-1]
    return tuple(x)


def minor2(M, i, j):
    """The 2x2 minor |i,j| of a 2-row matrix, columns 1-based."""
    if M.nrows != 2:
        raise SizeMismatch("minor2 needs exactly two rows")
    m = M.ncols
    if not (1 <= i <= m and 1 <= j <= m):
        raise BadIndex(f"column index out of range 1..{m}: {i}, {j}")
    (a, b) = M.rows
    return M.field.sub(M.field.mul(a[i - 1], b[j - 1]), M.field.mul(a[j - 1], b[i - 1]))


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of projective space stored with first nonzero coordinate 1."""

    field: Field
    coords: tuple

    def __post_init__(self):
        coords = tuple(self.field(x) for x in self.coords)
        lead = next((x for x in coords if x != 0), None)
        if lead is None:
            raise ZeroPoint("the zero vector is not a projective point")
        if lead != 1:
            raise ValueError(f"not in canonical form: {coords}")
        object.__setattr__(self, "coords", coords)

    @property
    def n(self):
        return len(self.coords)

    def __str__(self):
        return "[" + ":".join(str(x) for x in self.coords) + "]"


def normalize(v, field=QQ):
    """Scale ``v`` so that its first nonzero coordinate is 1."""
    if isinstance(v, ProjectivePoint):
        return v
    coords = tuple(field(x) for x in v)
    lead = next((x for x in coords if x != 0), None)
    if lead is None:
        raise ZeroPoint("the zero vector is not a projective point")
    inv = field.inv(lead)
    return ProjectivePoint(field, tuple(field.mul(x, inv) for x in coords))


def e(i, n, field=QQ):
    """Standard basis vector e_i (1-based) of length n."""
    return tuple(field(int(k == i - 1)) for k in range(n))


def vsum(*vs, field=QQ):
    return tuple(field(sum(xs)) for xs in zip(*vs))


@dataclass(frozen=True)
class Configuration:
    """An m-tuple of points of P^(n-1); columns are canonical projective points."""

    field: Field
    columns: tuple

    def __post_init__(self):
        if not self.columns:
            raise SizeMismatch("a configuration needs at least one point")
        cols = tuple(normalize(c, self.field) for c in self.columns)
        for c in cols:
            if c.field != self.field:
                raise FieldMismatch(f"point over {c.field} in a configuration over {self.field}")
        if len({c.n for c in cols}) > 1:
            raise SizeMismatch("points of different dimensions")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def of(cls, *columns, field=QQ):
        return cls(field, tuple(columns))

    @property
    def n(self):
        return self.columns[0].n

    @property
    def m(self):
        return len(self.columns)

    def matrix(self):
        return Matrix.from_columns([c.coords for c in self.columns], self.field)

    def act(self, g):
        """The diagonal action g.v."""
        if g.field != self.field:
            raise FieldMismatch(f"{g.field} acting on {self.field}")
        return Configuration(self.field, tuple(g.apply(c.coords) for c in self.columns))

    def permute(self, sigma):
        """Column permutation: the point in slot j moves to slot sigma[j] (0-based)."""
        cols = [None] * self.m
        for j, c in enumerate(self.columns):
            cols[sigma[j]] = c
        return Configuration(self.field, tuple(cols))

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.columns) + "]"
