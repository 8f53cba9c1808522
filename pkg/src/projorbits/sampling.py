"""Seeded random matrices and configurations for property checks."""

from .classify34 import ProjParam, all_labels, representative
from .linalg import QQ, Configuration, Matrix, rank


def _entry(rng, field, bound):
    if field.q is None:
        return rng.randint(-bound, bound)
    return rng.randrange(field.q)


def random_matrix(rng, r, c, field=QQ, bound=5):
    return Matrix(field, tuple(tuple(_entry(rng, field, bound) for _ in range(c)) for _ in range(r)))


def random_invertible(rng, n, field=QQ, bound=3):
    while True:
        g = random_matrix(rng, n, n, field, bound)
        if rank(g) == n:
            return g


def random_vector(rng, n, field=QQ, bound=2):
    while True:
        v = tuple(_entry(rng, field, bound) for _ in range(n))
        if any(v):
            return v


def random_primed(rng, field=QQ, bound=9):
    while True:
        if field.q is None:
            p = ProjParam(rng.randint(1, bound), rng.randint(-bound, bound))
        else:
            p = ProjParam(1, rng.randrange(field.q), field)
        if p.is_primed:
            return p


def random_configuration(rng, n=3, m=4, field=QQ):
    """A mix that reaches every (3,4) stratum: tiny-entry tuples and moved representatives."""
    if (n, m) == (3, 4) and rng.random() < 0.5:
        labels = [L for L in all_labels(random_primed(rng, field)) if L.kind != "phi6"]
        v = representative(rng.choice(labels), field=field)
        return v.act(random_invertible(rng, 3, field))
    return Configuration(field, tuple(random_vector(rng, n, field, bound=1) for _ in range(m)))
