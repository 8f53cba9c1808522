"""Rank functions of point configurations and their indecomposable splittings.

Subsets of [m] are bitmasks: bit ``i-1`` set means index ``i`` is in the set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadDimension, NotInImage, NotSingleOrbit, SizeMismatch
from .linalg import QQ, Configuration, Matrix, e, nullspace, rank, vsum

MAX_M = 16


def mask_of(indices):
    out = 0
    for i in indices:
        out |= 1 << (i - 1)
    return out


def indices_of(mask):
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def popcount(mask):
    return bin(mask).count("1")


@dataclass(frozen=True)
class RankFunction:
    m: int
    values: tuple

    def __post_init__(self):
        if not 0 <= self.m <= MAX_M:
            raise SizeMismatch(f"m must be at most {MAX_M}")
        if len(self.values) != 1 << self.m:
            raise SizeMismatch("need one value per subset")
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))

    @classmethod
    def from_function(cls, m, f):
        """Build from ``f(indices)`` where indices is a tuple of 1-based ints."""
        return cls(m, tuple(f(indices_of(s)) for s in range(1 << m)))

    def __getitem__(self, mask):
        return self.values[mask]

    def of(self, indices):
        return self.values[mask_of(indices)]

    def violations(self):
        """Names of the rank-function axioms that fail (empty when valid)."""
        v, full, bad = self.values, (1 << self.m) - 1, set()
        if v[0] != 0:
            bad.add("empty")
        for i in range(self.m):
            if v[1 << i] != 1:
                bad.add("singletons")
        for s in range(full + 1):
            for i in range(self.m):
                if not s >> i & 1:
                    t = s | 1 << i
                    if v[t] < v[s]:
                        bad.add("monotone")
                    if v[t] > v[s] + 1:
                        bad.add("unit increase")
        for s in range(full + 1):
            for t in range(s, full + 1):
                if v[s | t] + v[s & t] > v[s] + v[t]:
                    bad.add("submodular")
        return sorted(bad)

    def table(self):
        """Rows ``(indices, value)`` for every nonempty subset, by size then lexicographic."""
        subsets = sorted(range(1, 1 << self.m), key=lambda s: (popcount(s), indices_of(s)))
        return [(indices_of(s), self.values[s]) for s in subsets]


@dataclass(frozen=True)
class Splitting:
    """A set partition of [m] with a rank attached to each block."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(sorted(((tuple(sorted(I)), int(r)) for I, r in self.blocks),
                              key=lambda b: b[0][0] if b[0] else 0))
        seen = [i for I, _ in blocks for i in I]
        if any(not I for I, _ in blocks) or sorted(seen) != list(range(1, len(seen) + 1)):
            raise ValueError(f"blocks do not partition [m]: {blocks}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, *blocks):
        return cls(tuple(blocks))

    @property
    def m(self):
        return sum(len(I) for I, _ in self.blocks)

    @property
    def total_rank(self):
        return sum(r for _, r in self.blocks)

    def shape(self):
        """The multiset {(#I_k, r_k)} as a sorted tuple."""
        return tuple(sorted((len(I), r) for I, r in self.blocks))

    def __str__(self):
        return "{" + ", ".join("({%s},%d)" % (",".join(map(str, I)), r) for I, r in self.blocks) + "}"


def _check_same_m(phi, psi):
    if phi.m != psi.m:
        raise SizeMismatch(f"rank functions on {phi.m} and {psi.m} points")


def compute_pi(v: Configuration) -> RankFunction:
    """I -> dim span{v_i : i in I}."""
    if v.m > MAX_M:
        raise SizeMismatch(f"m must be at most {MAX_M}")
    cols = [c.coords for c in v.columns]
    values = [0] * (1 << v.m)
    for s in range(1, 1 << v.m):
        sub = [cols[i - 1] for i in indices_of(s)]
        values[s] = rank(Matrix.from_columns(sub, v.field))
    return RankFunction(v.m, tuple(values))


def leq(phi, psi):
    _check_same_m(phi, psi)
    return all(a <= b for a, b in zip(phi.values, psi.values))


def rho(phi: RankFunction) -> Splitting:
    """The finest partition {I_k} with phi(I) = sum_k phi(I & I_k).

    Blocks are the connected components of the matroid: two indices share a
    block exactly when some circuit contains both.
    """
    m = phi.m
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in range(1, 1 << m):
        size = popcount(s)
        if size < 2 or phi[s] != size - 1:
            continue
        if all(phi[s & ~(1 << i)] == size - 1 for i in range(m) if s >> i & 1):
            members = [i for i in range(m) if s >> i & 1]
            for i in members[1:]:
                parent[find(i)] = find(members[0])
    groups = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i + 1)
    return Splitting(tuple((tuple(I), phi.of(I)) for I in groups.values()))


def compute_varpi(v: Configuration) -> Splitting:
    return rho(compute_pi(v))


def in_image_varpi(s: Splitting, n: int) -> bool:
    blocks_ok = all(r == 1 or 2 <= r <= len(I) - 1 for I, r in s.blocks)
    return blocks_ok and s.total_rank <= n


def is_single_orbit_class(s: Splitting) -> bool:
    return all(r == 1 or 2 <= r == len(I) - 1 for I, r in s.blocks)


def canonical_representative(s: Splitting, n: int, field=QQ) -> Configuration:
    """The configuration built block by block from standard basis vectors."""
    if not in_image_varpi(s, n):
        raise NotInImage(f"{s} is not in the image of the splitting map for n={n}")
    cols = [None] * s.m
    offset = 0
    for I, r in s.blocks:
        basis = [e(offset + j, n, field) for j in range(1, r + 1)]
        for j, i in enumerate(I):
            cols[i - 1] = basis[j] if j < r else vsum(*basis, field=field)
        offset += r
    return Configuration.of(*cols, field=field)


def rank_function_of_splitting(s: Splitting) -> RankFunction:
    if not is_single_orbit_class(s):
        raise NotSingleOrbit(f"{s}: the fibre carries more than one rank function")
    masks = [(mask_of(I), r) for I, r in s.blocks]
    return RankFunction(s.m, tuple(sum(min(popcount(t & b), r) for b, r in masks)
                                   for t in range(1 << s.m)))


def _stabilizer_system(v):
    # unknowns: the n*n entries of X, then one eigenvalue per point
    n, m, F = v.n, v.m, v.field
    rows = []
    for i, c in enumerate(v.columns):
        x = c.coords
        for a in range(n):
            row = [F.zero] * (n * n + m)
            for b in range(n):
                row[a * n + b] = x[b]
            row[n * n + i] = F.neg(x[a])
            rows.append(tuple(row))
    return Matrix(F, tuple(rows))


def stabilizer_dim(v: Configuration) -> int:
    """Dimension of {X in gl_n : X v_i in <v_i> for all i}.

    The eigenvalues are determined by X because every v_i is nonzero, so this
    is the nullity of the combined system.
    """
    A = _stabilizer_system(v)
    return A.ncols - rank(A)


def nullspace_stabilizer(v: Configuration):
    """Basis (as flattened n*n matrices) of the linear stabilizer space."""
    return [b[: v.n * v.n] for b in nullspace(_stabilizer_system(v))]


def embed(v: Configuration, n2: int) -> Configuration:
    if n2 < v.n:
        raise BadDimension(f"cannot embed P^{v.n - 1} into P^{n2 - 1}")
    pad = (v.field.zero,) * (n2 - v.n)
    return Configuration(v.field, tuple(c.coords + pad for c in v.columns))
