"""Open-orbit and finite-type criteria for GL_n on (P^(n-1))^m, with witnesses."""

from .errors import BadDimension, NoOpenOrbit, NotInfiniteRange
from .linalg import QQ, Configuration, e, vsum
from .matroid import stabilizer_dim


def _check_n(n):
    if n < 2:
        raise BadDimension("n must be at least 2")


def has_open_orbit(n, m):
    _check_n(n)
    return m <= n + 1


def is_finite_type(n, m):
    _check_n(n)
    return m <= 3


def open_orbit_witness(n, m, field=QQ):
    """[e_1, ..., e_m] for m <= n, and [e_1, ..., e_n, e_1 + ... + e_n] for m = n + 1."""
    _check_n(n)
    if m > n + 1:
        raise NoOpenOrbit(f"no open orbit for n={n}, m={m}")
    cols = [e(i, n, field) for i in range(1, min(m, n) + 1)]
    if m == n + 1:
        cols.append(vsum(*cols, field=field))
    return Configuration.of(*cols, field=field)


def orbit_dimension(v):
    return v.n * v.n - stabilizer_dim(v)


def is_open(v):
    """Orbit dimension equals dim (P^(n-1))^m = (n-1)m."""
    return orbit_dimension(v) == (v.n - 1) * v.m


def infinite_family_witness(n, m, p):
    """v(p) = [e1, e2, e1+e2, p, ..., p] with p on the line spanned by e1, e2."""
    _check_n(n)
    if m < 4:
        raise NotInfiniteRange(f"m={m} is of finite type")
    F = p.field
    pt = (p.p1, p.p2) + (0,) * (n - 2)
    cols = [e(1, n, F), e(2, n, F), vsum(e(1, n, F), e(2, n, F), field=F)] + [pt] * (m - 3)
    return Configuration.of(*cols, field=F)
