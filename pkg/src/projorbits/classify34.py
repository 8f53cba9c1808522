"""Orbits of GL_3 acting diagonally on quadruples of points of P^2.

Every quadruple has one of 25 discrete labels, or lies in the rank-two
stratum ``phi[6]`` where it is an orbit ``O(5;p)`` determined by a point
``p`` of P^1 minus {0, 1, oo}.  Index data in labels is 1-based, as in the
usual ``phi[k;J]`` names.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import perms
from .errors import BadParameter, NotAnOrbit, UnsupportedShape, WrongStratum, ZeroPoint
from .linalg import QQ, Configuration, Field, Matrix, det, minor2, solve
from .matroid import RankFunction, compute_pi, embed, indices_of, leq, mask_of, popcount

PHI2 = "phi2"
PHI4 = "phi4"
PHI4PAIR = "phi4pair"
PHI5 = "phi5"
PHI6FIBER = "phi6"
PHI6PAIR = "phi6pair"
PHI7 = "phi7"
PHI8 = "phi8"
O5 = "O5"

_DIM = {PHI2: 2, PHI4: 4, PHI4PAIR: 4, PHI5: 5, O5: 5, PHI6FIBER: 6, PHI6PAIR: 6, PHI7: 7, PHI8: 8}
_KIND_ORDER = [PHI8, PHI7, PHI6PAIR, PHI6FIBER, PHI5, O5, PHI4PAIR, PHI4, PHI2]


@dataclass(frozen=True)
class ProjParam:
    """A point [p1:p2] of P^1, stored with leading coordinate 1."""

    p1: object
    p2: object
    field: Field = QQ

    def __post_init__(self):
        F = self.field
        p1, p2 = F(self.p1), F(self.p2)
        if p1 == 0 and p2 == 0:
            raise ZeroPoint("[0:0] is not a point of P^1")
        if p1 != 0:
            p1, p2 = F.one, F.div(p2, p1)
        else:
            p2 = F.one
        object.__setattr__(self, "p1", p1)
        object.__setattr__(self, "p2", p2)

    @classmethod
    def affine(cls, a, field=QQ):
        """The point with affine coordinate ``a = p2/p1``; ``None`` means infinity."""
        return cls(0, 1, field) if a is None else cls(1, a, field)

    @property
    def a(self):
        return self.p2 if self.p1 == 1 else None

    @property
    def is_primed(self):
        F = self.field
        return F.mul(F.mul(self.p1, self.p2), F.sub(self.p1, self.p2)) != 0

    @property
    def coords(self):
        return (self.p1, self.p2)

    def __str__(self):
        return f"[{self.p1}:{self.p2}]"


def _check_primed(p):
    if not p.is_primed:
        raise BadParameter(f"parameter {p} is one of the excluded points 0, 1, oo")


@dataclass(frozen=True)
class OrbitLabel:
    kind: str
    index: tuple = ()
    param: ProjParam | None = None

    @property
    def name(self):
        if self.kind == O5:
            return f"O(5;{self.param})"
        if self.kind == PHI6FIBER:
            return "phi[6]"
        k = _DIM[self.kind]
        if not self.index:
            return f"phi[{k}]"
        return f"phi[{k};" + ",".join(map(str, self.index)) + "]"

    def __str__(self):
        return self.name


def phi2():
    return OrbitLabel(PHI2)


def phi4(i):
    return OrbitLabel(PHI4, (i,))


def phi4pair(i, j):
    """The label of the pair partition {i,j} | complement, stored by the pair holding 1."""
    pair = {i, j}
    if len(pair) != 2 or not pair <= {1, 2, 3, 4}:
        raise ValueError(f"bad pair {i},{j}")
    if 1 not in pair:
        pair = {1, 2, 3, 4} - pair
    return OrbitLabel(PHI4PAIR, tuple(sorted(pair)))


def phi5(i, j):
    return OrbitLabel(PHI5, tuple(sorted((i, j))))


def phi6pair(k, l):
    return OrbitLabel(PHI6PAIR, tuple(sorted((k, l))))


def phi7(i):
    return OrbitLabel(PHI7, (i,))


def phi8():
    return OrbitLabel(PHI8)


def o5(p):
    _check_primed(p)
    return OrbitLabel(O5, (), p)


PHI6_FIBER = OrbitLabel(PHI6FIBER)


def discrete_labels():
    pairs = list(combinations(range(1, 5), 2))
    return ([phi8()] + [phi7(i) for i in range(1, 5)] + [phi6pair(*kl) for kl in pairs]
            + [phi5(*ij) for ij in pairs] + [phi4pair(1, j) for j in (2, 3, 4)]
            + [phi4(i) for i in range(1, 5)] + [phi2()])


def all_labels(p=None):
    labels = discrete_labels() + [PHI6_FIBER]
    if p is not None:
        labels.append(o5(p))
    return sorted(labels, key=label_sort_key)


def label_sort_key(L):
    return (-_DIM[L.kind], _KIND_ORDER.index(L.kind), L.index,
            L.param.coords if L.param is not None else ())


def orbit_dim(L):
    return _DIM[L.kind]


def _blocks_of(L):
    """Splitting blocks (index set, rank) for labels whose fibre is a single orbit."""
    full = {1, 2, 3, 4}
    if L.kind == PHI2:
        return [(full, 1)]
    if L.kind == PHI8:
        return [(full, 3)]
    if L.kind == PHI4:
        (i,) = L.index
        return [({i}, 1), (full - {i}, 1)]
    if L.kind == PHI4PAIR:
        return [(set(L.index), 1), (full - set(L.index), 1)]
    if L.kind == PHI6PAIR:
        i, j = sorted(full - set(L.index))
        return [({i}, 1), ({j}, 1), (set(L.index), 1)]
    if L.kind == PHI7:
        (i,) = L.index
        return [({i}, 1), (full - {i}, 2)]
    raise ValueError(f"{L} has no single-orbit splitting")


def phi_of_label(L) -> RankFunction:
    if L.kind in (PHI6FIBER, O5):
        return RankFunction.from_function(4, lambda I: min(len(I), 2))
    if L.kind == PHI5:
        i, j = L.index
        return RankFunction.from_function(4, lambda I: min(len({i if x == j else x for x in I}), 2))
    blocks = [(mask_of(I), r) for I, r in _blocks_of(L)]
    return RankFunction(4, tuple(sum(min(popcount(t & b), r) for b, r in blocks) for t in range(16)))


@lru_cache(maxsize=None)
def _label_by_phi():
    return {phi_of_label(L).values: L for L in discrete_labels()}


PHI6 = phi_of_label(PHI6_FIBER)


def extract_parameter(v: Configuration) -> ProjParam:
    """The p with v in O(5;p): frame v1, v2, v3 to e1, e2, e1+e2 and read off v4."""
    if compute_pi(v) != PHI6:
        raise WrongStratum(f"{v} is not in the phi[6] stratum")
    F = v.field
    v1, v2, v3, v4 = (c.coords for c in v.columns)
    A = Matrix.from_columns([v1, v2], F)
    a, b = solve(A, v3)
    c1, c2 = solve(A, v4)
    return ProjParam(F.div(c1, a), F.div(c2, b), F)


def _as_plane_config(v):
    if v.n == 2:
        return embed(v, 3)
    return v


def classify(v: Configuration) -> OrbitLabel:
    v = _as_plane_config(v)
    if (v.n, v.m) != (3, 4):
        raise UnsupportedShape(f"classification needs (n, m) in {{(3, 4), (2, 4)}}, got ({v.n}, {v.m})")
    phi = compute_pi(v)
    if phi == PHI6:
        return o5(extract_parameter(v))
    return _label_by_phi()[phi.values]


_BASE = {
    PHI2: (phi2(), ((1, 0, 0),) * 4),
    PHI4: (phi4(1), ((1, 0, 0), (0, 1, 0), (0, 1, 0), (0, 1, 0))),
    PHI4PAIR: (phi4pair(1, 2), ((1, 0, 0), (1, 0, 0), (0, 1, 0), (0, 1, 0))),
    PHI5: (phi5(1, 2), ((1, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0))),
    PHI6PAIR: (phi6pair(3, 4), ((1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 1))),
    PHI7: (phi7(1), ((1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1))),
    PHI8: (phi8(), ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))),
}


def representative(L, field=QQ) -> Configuration:
    """Table representative, moved by the first permutation carrying the base index data to L's."""
    if L.kind == PHI6FIBER:
        raise NotAnOrbit("phi[6] is a union of infinitely many orbits")
    if L.kind == O5:
        p = L.param
        return Configuration.of((1, 0, 0), (0, 1, 0), (1, 1, 0), (p.p1, p.p2, 0), field=p.field)
    base, cols = _BASE[L.kind]
    v = Configuration.of(*cols, field=field)
    for sigma in perms.all_perms(4):
        if s4_act(sigma, base) == L:
            return v.permute(sigma)
    raise AssertionError(f"no permutation reaches {L}")


_GEN_MATRICES = {
    0: ((0, -1), (-1, 0)),
    1: ((-1, 1), (0, 1)),
    2: ((0, -1), (-1, 0)),
}


def psi(sigma, field=QQ) -> Matrix:
    """Image of a permutation of [4] under the homomorphism S_4 -> GL_2.

    Generators: (1 2), (3 4) -> [[0,-1],[-1,0]] and (2 3) -> [[-1,1],[0,1]].
    """
    out = Matrix.identity(2, field)
    for k in perms.adjacent_word(sigma):
        out = out @ Matrix(field, _GEN_MATRICES[k])
    return out


def act_on_param(g, p):
    return ProjParam(*g.apply(p.coords), p.field)


def permute_columns(M, sigma):
    """Column j of M moves to slot sigma[j] (0-based), matching Configuration.permute."""
    cols = [None] * M.ncols
    for j, c in enumerate(M.columns):
        cols[sigma[j]] = c
    return Matrix.from_columns(cols, M.field)


def s4_act(sigma, L):
    """Relabel index data by sigma; O(5;p) goes to O(5; psi(sigma) p)."""
    f = lambda i: sigma[i - 1] + 1
    if L.kind == O5:
        return o5(act_on_param(psi(sigma, L.param.field), L.param))
    if L.kind == PHI4PAIR:
        return phi4pair(*map(f, L.index))
    if L.kind in (PHI5, PHI6PAIR):
        return OrbitLabel(L.kind, tuple(sorted(map(f, L.index))))
    if L.kind in (PHI4, PHI7):
        return OrbitLabel(L.kind, (f(L.index[0]),))
    return L


def parameter_orbit(p):
    _check_primed(p)
    return {act_on_param(psi(s, p.field), p) for s in perms.all_perms(4)}


def parameter_orbit_formula(p):
    """The six cross-ratio values p, 1/p, 1-p, 1/(1-p), 1-1/p, 1/(1-1/p) in affine form."""
    _check_primed(p)
    F, a = p.field, p.a
    one = F.one
    inv = lambda x: F.inv(x)
    vals = [a, inv(a), F.sub(one, a), inv(F.sub(one, a)), F.sub(one, inv(a)),
            inv(F.sub(one, inv(a)))]
    return {ProjParam.affine(x, F) for x in vals}


def _as_2x4(M):
    if isinstance(M, Configuration):
        M = M.matrix()
    if M.shape != (2, 4):
        raise UnsupportedShape(f"expected a 2x4 matrix, got {M.shape}")
    return M


def eval_Pp(p, M, form=0):
    """P_p(M) = p2|1,3||4,2| + p1|1,4||2,3|, or one of its two equivalent rewritings.

    ``p`` is a ProjParam or a raw coefficient pair; P_p is linear in (p1, p2),
    so rescaling p rescales the value.
    """
    M = _as_2x4(M)
    F = M.field
    p1, p2 = (F(x) for x in (p.coords if isinstance(p, ProjParam) else p))
    m = lambda i, j: minor2(M, i, j)
    if form == 0:
        val = p2 * m(1, 3) * m(4, 2) + p1 * m(1, 4) * m(2, 3)
    elif form == 1:
        val = -p1 * m(1, 2) * m(3, 4) + (p2 - p1) * m(1, 3) * m(4, 2)
    elif form == 2:
        val = -p2 * m(1, 2) * m(3, 4) + (p1 - p2) * m(1, 4) * m(2, 3)
    else:
        raise ValueError(f"no form {form}")
    return F(val)


def is_Pp_irreducible(p):
    return p.is_primed


def in_orbit5p(M, p):
    M = _as_2x4(M)
    F = M.field
    triple = F.mul(F.mul(minor2(M, 1, 2), minor2(M, 2, 3)), minor2(M, 3, 1))
    return triple != 0 and eval_Pp(p, M) == 0


def in_closure_by_minors(v: Configuration, phi: RankFunction) -> bool:
    """True when every (phi(I)+1)-minor of the columns in I vanishes, for all I."""
    cols = [c.coords for c in v.columns]
    n = v.n
    for s in range(1, 1 << v.m):
        idx = indices_of(s)
        k = phi[s] + 1
        if k > min(n, len(idx)):
            continue
        for rsel in combinations(range(n), k):
            for csel in combinations(idx, k):
                rows = [[cols[c - 1][r] for c in csel] for r in rsel]
                if det(rows, v.field) != 0:
                    return False
    return True


_MOD_S4_NAMES = {
    PHI8: "{phi[8]}", PHI7: "{phi[7;*]}", PHI6PAIR: "{phi[6;*,*]}", PHI6FIBER: "{phi[6]}",
    PHI5: "{phi[5;*,*]}", PHI4PAIR: "{phi[4;*,*]}", PHI4: "{phi[4;*]}", PHI2: "{phi[2]}",
}


def label_mod_s4(L):
    """Name of the S_4-class of L; O(5;p) classes are keyed by the orbit O_p."""
    if L.kind == O5:
        orbit = sorted(parameter_orbit(L.param), key=lambda q: q.a)
        return "{O(5;q) | q in O_p, p=%s}" % orbit[0].a
    return _MOD_S4_NAMES[L.kind]


def label_from_name(s):
    """Inverse of :attr:`OrbitLabel.name` for the discrete labels and phi[6]."""
    for L in discrete_labels() + [PHI6_FIBER]:
        if L.name == s:
            return L
    return None

