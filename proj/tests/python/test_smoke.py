import math

import numpy as np
import pytest

import pickspace as pk


def test_polynomial_roundtrip_and_eval():
    p = pk.Polynomial(2, [([1, 1], 1 + 0j), ([0, 0], 2.0)])
    assert p.dim == 2
    assert p.degree == 2
    assert p.coeff([1, 1]) == 1 + 0j
    assert p([0.5 + 0j, 0.5 + 0j]) == pytest.approx(2.25)
    q = pk.Polynomial.parse("2 + z1 z2", 2)
    assert q == p

    with pytest.raises(ValueError):
        pk.Polynomial.parse("z1 + + z2", 2)


def test_poly_algebra():
    z1 = pk.coordinate(2, 0)
    z2 = pk.coordinate(2, 1)
    assert (z1 * z2).coeff([1, 1]) == 1 + 0j
    assert (z1 + (-z1)).degree == -1
    r = pk.radial_derivative(pk.Polynomial.parse("z1^2 z2", 2), 2.0)
    assert r.coeff([2, 1]) == pytest.approx(9.0)


def test_drury_arveson_norms():
    assert pk.monomial_norm_da([1, 1]) == (1, 2)
    assert pk.monomial_norm_da([2, 1]) == (1, 3)
    h2 = pk.Space.drury_arveson(2)
    assert pk.monomial_norm_sq(h2, [1, 1]) == pytest.approx(0.5)
    p = pk.Polynomial.parse("z1 + z2", 2)
    assert pk.space_norm(h2, p) == pytest.approx(math.sqrt(2))


def test_besov_shift_band():
    lo, hi = pk.besov_shift_ratio(1.0, 1.0, 2, 40)
    assert lo == pytest.approx(0.25, rel=1e-9)
    assert hi / lo <= 10.0


def test_kernels_and_grams():
    k = pk.Kernel.drury_arveson(2)
    assert k([0.5, 0.0], [0.5, 0.0]) == pytest.approx(4.0 / 3.0)
    pts = pk.PointSet.random(2, 20, seed=7)
    g = pk.gram(k, pts)
    assert g.shape == (20, 20)
    assert pk.min_eigenvalue(g) > 0  # kernel gram is positive definite
    u = pk.complete_pick_gram(k, pts, [0j, 0j])
    assert pk.min_eigenvalue(u) >= -1e-10


def test_bergman_kernel_is_not_complete_pick():
    res = pk.pick_refutation_search(pk.Kernel.power(2, 3.0), [0j, 0j], 10000, seed=42)
    assert res["refuted"]
    assert res["min_eig"] < -1e-6


def test_mult_matrix_and_norms():
    h2 = pk.Space.drury_arveson(2)
    z1 = pk.coordinate(2, 0)
    z2 = pk.coordinate(2, 1)
    m = pk.mult_matrix(h2, h2, z1, 4)
    assert pk.op_norm(m) == pytest.approx(1.0)
    raw = pk.mult_matrix_raw(h2, h2, z1, 4)
    assert np.max(np.abs(m - raw)) <= 1e-12
    # the coordinate row is the d-contraction, the column is not contractive
    assert pk.row_norm(h2, h2, [z1, z2], 4) == pytest.approx(1.0)
    assert pk.column_norm(h2, h2, [z1, z2], 4) == pytest.approx(math.sqrt(2))


def test_counterexample():
    col_sq, row = pk.counterexample_report(2, 8, 9)
    assert col_sq == pytest.approx(pk.counterexample_column_sq_lower(2, 8))
    zeta_partial = sum(1.0 / n**2 for n in range(1, 9))
    assert row**2 <= zeta_partial + 1e-8
    assert row <= math.pi / math.sqrt(6) + 1e-8


def test_weak_product_and_hankel():
    h2 = pk.Space.drury_arveson(2)
    z1 = pk.coordinate(2, 0)
    z2 = pk.coordinate(2, 1)
    assert pk.wp_norm_upper(h2, [(z1, z2)]) == pytest.approx(1.0)
    a, b = pk.square_split(z1, z2, h2)
    resid = a * a - b * b - z1 * z2
    assert pk.space_norm(h2, resid) <= 1e-14

    rep = pk.smirnov_verify(h2, z2, pk.Polynomial.parse("(1-z1/2)^2 z2", 2),
                            pk.Polynomial.parse("z1/2", 2), 15)
    assert rep["residual"] <= 1e-12
    assert all(fb["contraction_bound"] <= 1 + 1e-9 for fb in rep["fraction_bounds"])
    assert all(fb["cyclic_bound"] <= 2 + 1e-9 for fb in rep["fraction_bounds"])

    assert pk.hankel_norm_lower(h2, pk.one(2), 3) == pytest.approx(1.0)
    defect = pk.hankel_intertwine_check(h2, pk.Polynomial.parse("z1^2 z2", 2), 4, z1, 2)
    assert defect <= 1e-12


def test_oracle_paths():
    w = pk.RadialWeight.one()
    q = pk.quad_monomial_norm(w, [1, 0])
    closed = pk.monomial_norm_sq(pk.Space.bergman(2), [1, 0])
    assert q == pytest.approx(closed, rel=1e-8)
    est, se = pk.mc_inner_product(w, pk.coordinate(2, 0), pk.coordinate(2, 1),
                                  n_samples=50000, seed=11)
    assert abs(est) <= 3 * se
