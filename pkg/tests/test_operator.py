import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixspec.errors import DomainError, ShapeError
from mixspec.grid import build_grid
from mixspec.measure import SignedMeasure
from mixspec.operator import (
    assemble_single,
    assemble_superposed,
    brute_force_apply,
    cns_constant,
    fourier_symbol,
    inner_product,
    load_dense,
    seminorm_sq,
    seminorm_table,
    stencil_weights,
    xplus_norm_sq,
)

# orders below ~1e-300 give subnormal stencil entries where scaling is not exact
orders = st.one_of(st.sampled_from([0.0, 1.0]), st.floats(1e-6, 1.0))


def test_cns_half():
    assert cns_constant(1, 0.5) == pytest.approx(1 / (2 * np.pi), rel=1e-15)


def test_cns_bounded_ratio_near_endpoints():
    r = [cns_constant(1, s) / (s * (1 - s)) for s in (1e-6, 1e-3, 0.999, 1 - 1e-6)]
    assert all(0 < v < 10 for v in r)


def test_cns_near_one_small():
    assert 0 < cns_constant(1, 0.999) < 1e-2


@pytest.mark.parametrize("s", [0.0, 1.0, -0.5])
def test_cns_endpoints_rejected(s):
    with pytest.raises(DomainError):
        cns_constant(1, s)


def test_stencil_laplacian():
    g = stencil_weights(1.0, 6)
    np.testing.assert_array_equal(g, [2, -1, 0, 0, 0, 0, 0])


def test_stencil_identity():
    g = stencil_weights(0.0, 6)
    np.testing.assert_array_equal(g, [1, 0, 0, 0, 0, 0, 0])


def test_stencil_half():
    assert stencil_weights(0.5, 1)[0] == pytest.approx(4 / np.pi, rel=1e-15)


def test_stencil_matches_gamma_formula():
    from scipy.special import gamma

    s = 0.37
    k = np.arange(12)
    ref = (-1.0) ** k * gamma(2 * s + 1) / (gamma(s - k + 1) * gamma(s + k + 1))
    np.testing.assert_allclose(stencil_weights(s, 11), ref, rtol=1e-13)


@given(st.floats(0.01, 0.99))
def test_stencil_signs_and_partial_sums(s):
    g = stencil_weights(s, 400)
    assert g[0] > 0 and np.all(g[1:] <= 0)
    partial = g[0] + 2 * np.cumsum(g[1:])
    assert np.all(np.diff(partial) <= 0)
    assert partial[-1] > 0
    # the tail decays like k^(-2s), so the full sum is zero in the limit
    assert partial[-1] < partial[0]


def test_identity_and_laplacian_exact():
    g = build_grid([(0, 1)], 1 / 16)
    np.testing.assert_array_equal(assemble_single(g, 0.0).entries, np.eye(g.n))
    L = (2 * np.eye(g.n) - np.eye(g.n, k=1) - np.eye(g.n, k=-1)) * 16.0**2
    np.testing.assert_array_equal(assemble_single(g, 1.0).entries, L)


def test_small_laplacian_eigenvalue():
    g = build_grid([(0, 1)], 0.25)
    lam = np.linalg.eigvalsh(assemble_single(g, 1.0).entries)[0]
    assert lam == pytest.approx((2 - np.sqrt(2)) * 16, rel=1e-14)
    assert lam == pytest.approx(9.3726, abs=1e-4)


def test_cross_blocks(split_grid):
    m0, m1 = split_grid.component_mask(0), split_grid.component_mask(1)
    A1 = assemble_single(split_grid, 1.0).entries
    assert not np.any(A1[np.ix_(m0, m1)])
    for s in (0.1, 0.5, 0.9):
        As = assemble_single(split_grid, s).entries
        assert np.all(As[np.ix_(m0, m1)] < 0)


@settings(max_examples=40, deadline=None)
@given(orders)
def test_symmetric_psd(s):
    g = build_grid([(-1, -0.5), (0, 1)], 1 / 24)
    A = assemble_single(g, s).entries
    assert np.max(np.abs(A - A.T)) <= 1e-12 * np.max(np.abs(A))
    assert np.linalg.eigvalsh(A)[0] >= -1e-10 * np.linalg.norm(A, 2)


def test_superposed_single_atom(unit_grid):
    np.testing.assert_array_equal(
        assemble_superposed(unit_grid, [(1.0, 1.0)]).entries, assemble_single(unit_grid, 1.0).entries
    )


def test_superposed_duplicate_merge(unit_grid):
    A = assemble_superposed(unit_grid, [(0.0, 0.5), (0.0, 0.5)]).entries
    np.testing.assert_array_equal(A, np.eye(unit_grid.n))


def test_superposed_additivity(unit_grid, rng):
    A = assemble_superposed(unit_grid, [(0.3, 1.0), (0.7, 2.0)])
    for _ in range(5):
        u = rng.standard_normal(unit_grid.n)
        expected = seminorm_sq(unit_grid, u, 0.3) + 2 * seminorm_sq(unit_grid, u, 0.7)
        assert A.quadratic(u) == pytest.approx(expected, rel=1e-12)


@given(st.lists(st.tuples(orders, st.floats(0.01, 5.0)), min_size=1, max_size=4))
def test_superposed_linear_in_weights(atoms):
    g = build_grid([(0, 1)], 1 / 16)
    A = assemble_superposed(g, atoms).entries
    B = assemble_superposed(g, [(s, 2 * w) for s, w in atoms]).entries
    np.testing.assert_array_equal(B, 2 * A)


def test_superposed_empty():
    with pytest.raises(DomainError):
        assemble_superposed(build_grid([(0, 1)], 0.25), [])


def test_seminorm_basics():
    g = build_grid([(0, 1)], 0.25)
    assert seminorm_sq(g, np.ones(3), 0.0) == pytest.approx(0.75)
    for s in (0.0, 0.4, 1.0):
        assert seminorm_sq(g, np.zeros(3), s) == 0.0
    with pytest.raises(ShapeError):
        seminorm_sq(g, np.ones(4), 0.5)


def test_dirichlet_energy_of_sine():
    g = build_grid([(0, 1)], 1 / 1024)
    u = np.sin(np.pi * g.x)
    assert seminorm_sq(g, u, 1.0) == pytest.approx(np.pi**2 / 2, abs=1e-3)
    diff = np.diff(np.concatenate([[0.0], u, [0.0]])) / g.h
    assert seminorm_sq(g, u, 1.0) == pytest.approx(g.h * np.sum(diff**2), rel=1e-12)


def test_seminorm_table(unit_grid, rng):
    u = rng.standard_normal(unit_grid.n)
    t = seminorm_table(unit_grid, u, [0.0, 0.5, 1.0])
    assert t[0.0] == pytest.approx(unit_grid.h * u @ u)
    assert all(v >= 0 for v in t.values())


def test_inner_product_symmetric(unit_grid, rng):
    u, v = rng.standard_normal((2, unit_grid.n))
    assert inner_product(unit_grid, u, v, 0.4) == pytest.approx(inner_product(unit_grid, v, u, 0.4), rel=1e-12)


def test_xplus_norm(unit_grid, rng):
    u = rng.standard_normal(unit_grid.n)
    m = SignedMeasure([(1.0, 1.0)], [(0.0, 1.0)], 0.5)
    assert xplus_norm_sq(unit_grid, u, m) == pytest.approx(seminorm_sq(unit_grid, u, 1.0))
    assert xplus_norm_sq(unit_grid, np.zeros(unit_grid.n), m) == 0.0
    m2 = SignedMeasure([(1.0, 1.0), (0.6, 3.0)], [(0.0, 1.0)], 0.5)
    A = assemble_superposed(unit_grid, m2.plus)
    assert xplus_norm_sq(unit_grid, u, m2) == pytest.approx(A.quadratic(u), rel=1e-12)


def test_symbol_values():
    assert fourier_symbol(1.0, 0.01, 1.0) == pytest.approx(39.465, abs=1e-3)
    assert fourier_symbol(1.0, 0.01, 1.0) / (2 * np.pi) ** 2 - 1 == pytest.approx(-(np.pi * 0.01) ** 2 / 3, rel=1e-3)
    assert fourier_symbol(0.0, 0.1, 3.0) == 1.0


@pytest.mark.parametrize("s", [0.25, 0.5, 0.75])
def test_symbol_second_order(s):
    hs = 2.0 ** -np.arange(4, 11)
    err = np.array([abs(fourier_symbol(s, h, 1.0) - (2 * np.pi) ** (2 * s)) for h in hs])
    orders_ = np.log2(err[:-1] / err[1:])
    assert np.all(orders_ >= 1.9)


def test_oracle_hat_function():
    g = build_grid([(-1, 1)], 1 / 64)
    u = 1 - np.abs(g.x)
    for s in (0.3, 0.5, 0.7):
        bf = brute_force_apply(g, u, s)
        Au = assemble_single(g, s).entries @ u
        inner = slice(2, -2)
        err = np.max(np.abs(bf[inner] - Au[inner])) / np.max(np.abs(Au[inner]))
        assert err < 0.05


def test_oracle_zero_and_sign():
    g = build_grid([(-1, 1)], 1 / 32)
    assert not np.any(brute_force_apply(g, np.zeros(g.n), 0.5))
    u = np.cos(np.pi * g.x / 2) ** 2
    i = int(np.argmax(u))
    assert brute_force_apply(g, u, 0.5)[i] > 0


def test_oracle_preconditions(unit_grid):
    u = np.ones(unit_grid.n)
    for s in (0.0, 1.0):
        with pytest.raises(DomainError):
            brute_force_apply(unit_grid, u, s)
    with pytest.raises(DomainError):
        brute_force_apply(unit_grid, u, 0.5, quad_points=16)


def test_dense_export_roundtrip(tmp_path):
    g = build_grid([(0, 1)], 0.125)
    A = assemble_single(g, 0.37)
    A.save_dense(tmp_path / "a.txt")
    np.testing.assert_array_equal(load_dense(tmp_path / "a.txt"), A.entries)
