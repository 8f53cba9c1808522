import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import cross_ratio_orbit
from projorbits import classify34 as c34
from projorbits import perms
from projorbits.errors import BadParameter, NotAnOrbit, UnsupportedShape, WrongStratum
from projorbits.linalg import GF, QQ, Configuration, Matrix, e, minor2
from projorbits.matroid import compute_pi, compute_varpi, stabilizer_dim
from projorbits.sampling import random_configuration, random_matrix

E1, E2, E3 = e(1, 3), e(2, 3), e(3, 3)
E12, E23, E123 = (1, 1, 0), (0, 1, 1), (1, 1, 1)

TABLE = [
    ("phi[2]", (E1, E1, E1, E1), {((1, 2, 3, 4), 1)}),
    ("phi[4;1]", (E1, E2, E2, E2), {((1,), 1), ((2, 3, 4), 1)}),
    ("phi[4;1,2]", (E1, E1, E2, E2), {((1, 2), 1), ((3, 4), 1)}),
    ("phi[6;3,4]", (E1, E2, E3, E3), {((1,), 1), ((2,), 1), ((3, 4), 1)}),
    ("phi[7;1]", (E1, E2, E3, E23), {((1,), 1), ((2, 3, 4), 2)}),
    ("phi[8]", (E1, E2, E3, E123), {((1, 2, 3, 4), 3)}),
    ("phi[5;1,2]", (E1, E1, E2, E12), {((1, 2, 3, 4), 2)}),
]


@pytest.mark.parametrize("name, cols, blocks", TABLE)
def test_table_representatives(name, cols, blocks):
    v = Configuration.of(*cols)
    assert c34.classify(v).name == name
    assert set(compute_varpi(v).blocks) == blocks


def test_every_discrete_label_round_trips():
    labels = c34.discrete_labels()
    assert len(labels) == 25 and len(set(labels)) == 25
    for L in labels:
        v = c34.representative(L)
        assert c34.classify(v) == L
        assert stabilizer_dim(v) == 9 - c34.orbit_dim(L)
        assert c34.label_from_name(L.name) == L


def test_phi7_example_on_the_fourth_index():
    v = Configuration.of(E2, E3, E23, E1)
    assert c34.classify(v) == c34.phi7(4)
    phi = compute_pi(v)
    for I, r in phi.table():
        assert r == min(len(set(I) & {4}), 1) + min(len(set(I) - {4}), 2)


@pytest.mark.parametrize("p, name", [((1, 0, 0), "phi[5;1,4]"), ((0, 1, 0), "phi[5;2,4]"),
                                     ((1, 1, 0), "phi[5;3,4]")])
def test_special_parameters_degenerate_to_phi5(p, name):
    assert c34.classify(Configuration.of(E1, E2, E12, p)).name == name


def test_o5_family():
    v = Configuration.of(E1, E2, E12, (1, 2, 0))
    L = c34.classify(v)
    assert L.name == "O(5;[1:2])" and L.param.a == 2 and c34.orbit_dim(L) == 5
    assert stabilizer_dim(v) == 4
    assert c34.classify(Configuration.of(E1, E2, E12, (2, 3, 0))).param.a == Fraction(3, 2)
    with pytest.raises(BadParameter):
        c34.o5(c34.ProjParam.affine(1))
    with pytest.raises(BadParameter):
        c34.o5(c34.ProjParam.affine(None))


def test_parameter_is_gl_invariant(rng):
    from projorbits.sampling import random_invertible
    v = Configuration.of(E1, E2, E12, (3, -7, 0))
    for _ in range(30):
        g = random_invertible(rng, 3)
        assert c34.extract_parameter(v.act(g)) == c34.ProjParam(3, -7)


def test_plane_input_is_embedded():
    v = Configuration.of((1, 0), (0, 1), (1, 1), (1, 5))
    assert c34.classify(v) == c34.o5(c34.ProjParam.affine(5))
    assert c34.classify(Configuration.of((1, 0), (1, 0), (0, 1), (0, 1))).name == "phi[4;1,2]"


def test_errors():
    with pytest.raises(UnsupportedShape):
        c34.classify(Configuration.of(E1, E2, E3))
    with pytest.raises(WrongStratum):
        c34.extract_parameter(Configuration.of(E1, E2, E3, E123))
    with pytest.raises(NotAnOrbit):
        c34.representative(c34.PHI6_FIBER)


def test_finite_field_classification():
    F = GF(7)
    v = Configuration.of((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 3, 0), field=F)
    assert c34.classify(v) == c34.o5(c34.ProjParam(1, 3, F))
    assert c34.classify(c34.representative(c34.phi7(2), field=F)) == c34.phi7(2)


def _eval(p, M):
    return c34.eval_Pp(p, M)


@pytest.mark.parametrize("cycle, image", [
    ((1, 2), lambda p1, p2: (-p2, -p1)),
    ((2, 3), lambda p1, p2: (p2 - p1, p2)),
    ((3, 4), lambda p1, p2: (-p2, -p1)),
    ((2, 4), lambda p1, p2: (p1, p1 - p2)),
])
def test_transposition_laws(rng, cycle, image):
    s = perms.from_cycles(cycle)
    for F in (QQ, GF(7)):
        for _ in range(50):
            M = random_matrix(rng, 2, 4, F)
            p1, p2 = F(rng.randint(-5, 5)), F(rng.randint(-5, 5))
            moved = c34.permute_columns(M, s)
            assert _eval((p1, p2), moved) == _eval(tuple(F(x) for x in image(p1, p2)), M)
            assert c34.psi(s, F).apply((p1, p2)) == tuple(F(x) for x in image(p1, p2))


def test_psi_is_a_homomorphism_with_klein_kernel():
    S4 = perms.all_perms(4)
    for s in S4:
        for t in S4:
            assert c34.psi(perms.compose(s, t)) == c34.psi(s) @ c34.psi(t)
    kernel = {s for s in S4 if c34.psi(s) == Matrix.identity(2)}
    klein = {perms.identity(), perms.from_cycles((1, 2), (3, 4)),
             perms.from_cycles((1, 3), (2, 4)), perms.from_cycles((1, 4), (2, 3))}
    assert kernel == klein
    special = [c34.ProjParam.affine(a) for a in (0, 1, None)]
    images = {tuple(c34.act_on_param(c34.psi(s), p) for p in special) for s in S4}
    assert len(images) == 6


@given(st.integers(0, 10**9))
@settings(max_examples=200, deadline=None)
def test_s4_equivariance(seed):
    rng = random.Random(seed)
    v = random_configuration(rng)
    s = rng.choice(perms.all_perms(4))
    L = c34.classify(v)
    M = c34.classify(v.permute(s))
    assert M == c34.s4_act(s, L)
    if L.kind == c34.O5:
        assert M.param.a in cross_ratio_orbit(L.param.a)


@pytest.mark.parametrize("a", [2, 3, Fraction(-5, 7), -1, Fraction(1, 2)])
def test_parameter_orbit_matches_cross_ratio_set(a):
    orbit = c34.parameter_orbit(c34.ProjParam.affine(a))
    assert {p.a for p in orbit} == cross_ratio_orbit(a)
    assert c34.parameter_orbit_formula(c34.ProjParam.affine(a)) == orbit


def test_harmonic_orbit_collapses():
    assert {p.a for p in c34.parameter_orbit(c34.ProjParam.affine(-1))} == {-1, 2, Fraction(1, 2)}


def test_polynomial_on_the_family():
    for q1, q2 in [(1, 2), (2, 3), (-1, 4)]:
        M = Matrix.from_columns([(1, 0), (0, 1), (1, 1), (q1, q2)])
        for p1, p2 in [(1, 3), (2, -1), (5, 7)]:
            assert c34.eval_Pp((p1, p2), M) == p2 * q1 - p1 * q2


def test_polynomial_forms_and_plucker(rng):
    for F in (QQ, GF(7)):
        for _ in range(100):
            M = random_matrix(rng, 2, 4, F)
            m = lambda i, j: minor2(M, i, j)
            assert F(m(1, 2) * m(3, 4) + m(1, 3) * m(4, 2) + m(1, 4) * m(2, 3)) == 0
            p = (F(rng.randint(-4, 4)), F(rng.randint(-4, 4)))
            assert len({c34.eval_Pp(p, M, k) for k in range(3)}) == 1


def test_irreducibility_criterion():
    assert c34.is_Pp_irreducible(c34.ProjParam.affine(2))
    for a in (0, 1, None):
        assert not c34.is_Pp_irreducible(c34.ProjParam.affine(a))


def test_mod_s4_names():
    p = c34.ProjParam.affine(2)
    assert c34.label_mod_s4(c34.phi7(3)) == "{phi[7;*]}"
    assert c34.label_mod_s4(c34.o5(p)) == c34.label_mod_s4(c34.o5(c34.ProjParam.affine(-1)))
    assert len({c34.label_mod_s4(L) for L in c34.all_labels(p)}) == 9
