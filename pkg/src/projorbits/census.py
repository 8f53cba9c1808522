"""Exhaustive orbit census of (P^(n-1)(F_q))^m.

Two independent counts: grouping configurations by their (3,4) label, and
closing the configuration set under a generating set of GL_n(F_q) with a
union-find.  Configurations are encoded as integers in base N (N = number of
points), first column most significant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .classify34 import (
    PHI6, ProjParam, classify, discrete_labels, o5, orbit_dim, phi_of_label, representative,
)
from .errors import TooLarge
from .linalg import GF, Configuration, Matrix, normalize
from .matroid import compute_varpi, nullspace_stabilizer

BY_LABEL = "ByLabel"
BY_GROUP_ACTION = "ByGroupAction"
MAX_STATES = 10**6


def enumerate_points(q, n):
    """Canonical points of P^(n-1)(F_q): leading one, grouped by its position."""
    F = GF(q)
    pts = []
    for lead in range(n):
        for tail in product(range(q), repeat=n - lead - 1):
            pts.append(normalize((0,) * lead + (1,) + tail, F))
    return pts


def gl_order(n, q):
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


@dataclass
class CensusReport:
    q: int
    n: int
    m: int
    total_points: int
    orbit_count: int
    per_label: list
    method: str
    orbits: dict = field(default_factory=dict, repr=False, compare=False)

    def to_dict(self):
        return {
            "q": self.q, "n": self.n, "m": self.m, "total_points": self.total_points,
            "orbit_count": self.orbit_count,
            "per_label": [list(row) for row in self.per_label], "method": self.method,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self):
        lines = [f"census q={self.q} n={self.n} m={self.m} method={self.method}",
                 f"total_points {self.total_points}"]
        for name, count, stab in self.per_label:
            lines.append(f"  {name}: count {count}, stabilizer order {stab}")
        lines.append(f"{self.orbit_count} orbits")
        return "\n".join(lines) + "\n"

    def problems(self):
        """Failed internal consistency checks (empty when all hold)."""
        out = []
        if sum(c for _, c, _ in self.per_label) != self.total_points:
            out.append("configuration counts do not add up to the number of configurations")
        g = gl_order(self.n, self.q)
        for name, count, stab in self.per_label:
            if stab is None or count * stab != g:
                out.append(f"{name}: orbit size {count} does not divide |GL| = {g}")
        if len(self.per_label) != self.orbit_count:
            out.append("orbit_count disagrees with the per-label table")
        return out

    def partition(self):
        return {frozenset(v.tolist()) for v in self.orbits.values()}


def _digits(states, N, m):
    return [(states // N ** (m - 1 - k)) % N for k in range(m)]


def decode(state, points, m):
    N = len(points)
    idx = [(state // N ** (m - 1 - k)) % N for k in range(m)]
    return Configuration(points[0].field, tuple(points[i] for i in idx))


def _cross(u, v, q):
    return np.stack([u[:, 1] * v[:, 2] - u[:, 2] * v[:, 1],
                     u[:, 2] * v[:, 0] - u[:, 0] * v[:, 2],
                     u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]], axis=1) % q


def _rank_key(values):
    return sum(int(x) << (2 * s) for s, x in enumerate(values))


def label_codes(q):
    """Label of every configuration of (P^2(F_q))^4, as codes into a label list.

    Rank functions come from lookup tables (points are canonical, so a pair
    has rank 1 exactly when the indices agree; triples use a determinant
    table).  On the phi[6] stratum the parameter is
    [|4,2||1,3| : |1,4||3,2|], with the 2x2 minors read off one coordinate
    of the cross products.
    """
    points = enumerate_points(q, 3)
    N = len(points)
    P = np.array([p.coords for p in points], dtype=np.int64)
    a, b, c = (x.ravel() for x in np.meshgrid(np.arange(N), np.arange(N), np.arange(N), indexing="ij"))
    d3 = (_cross(P[a], P[b], q) * P[c]).sum(axis=1) % q
    triple = np.where(d3 != 0, 3, np.where((a == b) & (b == c), 1, 2)).reshape(N, N, N)

    states = np.arange(N**4, dtype=np.int64)
    cols = _digits(states, N, 4)
    rank = {}
    for s in range(1, 16):
        idx = [cols[i] for i in range(4) if s >> i & 1]
        if len(idx) == 1:
            rank[s] = np.ones_like(states)
        elif len(idx) == 2:
            rank[s] = 1 + (idx[0] != idx[1])
        elif len(idx) == 3:
            rank[s] = triple[idx[0], idx[1], idx[2]]
    rank[15] = np.maximum.reduce([rank[7], rank[11], rank[13], rank[14]])
    key = sum(rank[s].astype(np.int64) << (2 * s) for s in range(1, 16))

    labels = discrete_labels()
    code_of_key = {_rank_key(phi_of_label(L).values): i for i, L in enumerate(labels)}
    phi6_key = _rank_key(PHI6.values)
    codes = np.full(N**4, -1, dtype=np.int64)
    for k, i in code_of_key.items():
        codes[key == k] = i

    sel = np.flatnonzero(key == phi6_key)
    if sel.size:
        V = [P[col[sel]] for col in cols]
        c12 = _cross(V[0], V[1], q)
        axis = np.argmax(c12 != 0, axis=1)
        rows = np.arange(sel.size)
        minor = lambda i, j: _cross(V[i - 1], V[j - 1], q)[rows, axis]
        p1 = minor(4, 2) * minor(1, 3) % q
        p2 = minor(1, 4) * minor(3, 2) % q
        inv = np.array([0] + [pow(x, -1, q) for x in range(1, q)], dtype=np.int64)
        aff = p2 * inv[p1] % q
        for x in np.unique(aff):
            labels.append(o5(ProjParam(1, int(x), GF(q))))
            codes[sel[aff == x]] = len(labels) - 1
    if (codes < 0).any():
        raise AssertionError("configurations left unlabelled")
    return codes, labels, points


def census_by_label(q):
    codes, labels, points = label_codes(q)
    counts = np.bincount(codes, minlength=len(labels))
    g = gl_order(3, q)
    per_label, orbits = [], {}
    for i, L in enumerate(labels):
        if counts[i] == 0:
            continue
        n_i = int(counts[i])
        per_label.append((L.name, n_i, g // n_i if g % n_i == 0 else None))
        orbits[L.name] = np.flatnonzero(codes == i)
    return CensusReport(q, 3, 4, len(points) ** 4, len(per_label), per_label, BY_LABEL, orbits)


def generators(n, q):
    """Elementary transvections E_ij(1) and diag(g, 1, ..., 1) for a primitive root g."""
    F = GF(q)
    gens = []
    for i in range(n):
        for j in range(n):
            if i != j:
                rows = [[int(r == c) for c in range(n)] for r in range(n)]
                rows[i][j] = 1
                gens.append(Matrix(F, tuple(map(tuple, rows))))
    g = primitive_root(q)
    if g != 1:
        rows = [[int(r == c) for c in range(n)] for r in range(n)]
        rows[0][0] = g
        gens.append(Matrix(F, tuple(map(tuple, rows))))
    return gens


def primitive_root(q):
    if q == 2:
        return 1
    for g in range(2, q):
        if len({pow(g, k, q) for k in range(1, q)}) == q - 1:
            return g
    raise AssertionError("no primitive root")


class UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            if y < x:
                x, y = y, x
            self.parent[y] = x


def census_by_group_action(q, n=3, m=4):
    points = enumerate_points(q, n)
    N = len(points)
    if N**m > MAX_STATES:
        raise TooLarge(f"{N}^{m} configurations exceed the limit of {MAX_STATES}")
    F = GF(q)
    index = {p.coords: i for i, p in enumerate(points)}
    states = np.arange(N**m, dtype=np.int64)
    cols = _digits(states, N, m)
    uf = UnionFind(N**m)
    for g in generators(n, q):
        perm = np.array([index[normalize(g.apply(p.coords), F).coords] for p in points], dtype=np.int64)
        image = sum(perm[cols[k]] * N ** (m - 1 - k) for k in range(m))
        for x, y in zip(states.tolist(), image.tolist()):
            uf.union(x, y)
    roots = np.array([uf.find(x) for x in range(N**m)], dtype=np.int64)

    gl = gl_order(n, q)
    per_label, orbits = [], {}
    for r in np.unique(roots):
        members = np.flatnonzero(roots == r)
        rep = decode(int(members[0]), points, m)
        key = classify(rep).name if (n, m) == (3, 4) else f"orbit of {rep}"
        size = int(members.size)
        per_label.append((key, size, gl // size if gl % size == 0 else None))
        orbits[key] = members
    return CensusReport(q, n, m, N**m, len(per_label), per_label, BY_GROUP_ACTION, orbits)


def label_purity(q):
    """Orbits of the group-action census on which the label is not constant."""
    codes, labels, _ = label_codes(q)
    report = census_by_group_action(q)
    return [key for key, members in report.orbits.items() if len(set(codes[members].tolist())) != 1]


def stabilizer_order(v):
    """|{g in GL_n(F_q) : g v_i in <v_i> for all i}| by enumerating the linear stabilizer space."""
    F = v.field
    basis = nullspace_stabilizer(v)
    n = v.n
    count = 0
    for coeffs in product(range(F.q), repeat=len(basis)):
        X = [sum(c * b[k] for c, b in zip(coeffs, basis)) % F.q for k in range(n * n)]
        if Matrix(F, tuple(tuple(X[r * n:(r + 1) * n]) for r in range(n))).det() != 0:
            count += 1
    return count


def stabilizer_model(l, R, q):
    """(q-1)^l q^(R(3-R)) |GL_(3-R)(q)| for a splitting with l blocks of total rank R."""
    return (q - 1) ** l * q ** (R * (3 - R)) * gl_order(3 - R, q)


def orbit_size_degree(l, R):
    """Degree in q of |GL_3(q)| / stabilizer_model(l, R, q), checked to be a polynomial."""
    import sympy

    t = sympy.Symbol("q")
    gl = lambda k: sympy.prod([t**k - t**i for i in range(k)])
    ratio = sympy.cancel(gl(3) / ((t - 1) ** l * t ** (R * (3 - R)) * gl(3 - R)))
    num, den = sympy.fraction(ratio)
    if sympy.degree(den, t) != 0:
        raise AssertionError("orbit size is not a polynomial in q")
    return int(sympy.degree(num, t))


@dataclass
class AuditRow:
    label: str
    q: int
    orbit_size: int
    stabilizer_enumerated: int
    stabilizer_model: int
    orbit_degree: int
    orbit_dim: int

    @property
    def ok(self):
        return (self.orbit_size * self.stabilizer_enumerated == gl_order(3, self.q)
                and self.stabilizer_enumerated == self.stabilizer_model
                and self.orbit_degree == self.orbit_dim)


def dimension_audit(q_list=(2, 3, 5)):
    """Orbit sizes against enumerated stabilizers and the polynomial model, per label and q."""
    rows = []
    for q in q_list:
        codes, labels, _ = label_codes(q)
        counts = np.bincount(codes, minlength=len(labels))
        for i, L in enumerate(labels):
            if counts[i] == 0:
                continue
            v = representative(L, field=GF(q))
            s = compute_varpi(v)
            l, R = len(s.blocks), s.total_rank
            rows.append(AuditRow(L.name, q, int(counts[i]), stabilizer_order(v),
                                 stabilizer_model(l, R, q), orbit_size_degree(l, R), orbit_dim(L)))
    return rows


def expected_orbit_count(q):
    return 25 + max(q - 2, 0)

