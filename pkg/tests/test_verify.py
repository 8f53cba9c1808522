from projorbits import classify34 as c34
from projorbits.cli import main
from oracles import gl2_orbit
from projorbits.linalg import GF, QQ, Matrix
from projorbits.verify import zero_set_is_orbit, zero_set_decomposes, plane_configs, run_suites, varpi_by_direct_sum
from projorbits.matroid import compute_varpi
from projorbits.sampling import random_configuration


def test_default_run_passes():
    results = run_suites(trials=40, seed=0)
    assert [name for name, _, bad in results if bad] == []
    assert all(ok > 0 for _, ok, _ in results)


def test_seeded_output_is_reproducible(capsys):
    argv = ["verify", "--trials", "60", "--seed", "7", "--suite", "plucker", "--suite", "psi-law"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_corrupted_psi_is_caught(monkeypatch, capsys):
    real = c34.psi

    def corrupted(sigma, field=QQ):
        g = real(sigma, field)
        if sigma == (1, 0, 2, 3):
            return Matrix(field, ((0, 1), (-1, 0)))
        return g

    monkeypatch.setattr(c34, "psi", corrupted)
    code = main(["verify", "--trials", "20", "--suite", "psi-homomorphism", "--suite", "psi-law"])
    out = capsys.readouterr().out
    assert code == 1
    assert "0 failed" not in out.splitlines()[0]


def test_zero_set_is_the_orbit_of_its_own_parameter():
    configs = plane_configs(5)
    p = c34.ProjParam(1, 2, GF(5))
    assert zero_set_is_orbit(5, p, configs) and zero_set_decomposes(5, p, configs)
    zero = {tuple(c.coords for c in v.columns) for v in configs if c34.in_orbit5p(v, p)}
    assert zero == gl2_orbit([(1, 0), (0, 1), (1, 1), (1, 2)], 5)
    assert zero.isdisjoint(gl2_orbit([(1, 0), (0, 1), (1, 1), (1, 3)], 5))


def test_direct_sum_helper_agrees(rng):
    for _ in range(50):
        v = random_configuration(rng, 3, 5)
        assert varpi_by_direct_sum(v) == compute_varpi(v)
