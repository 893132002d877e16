"""Paraproduct, balanced-product, bilinear-form, and norm tests."""

import numpy as np
import pytest

from holowave.paracalc import (
    BilinearSymbol,
    CutoffParams,
    SpaceSpec,
    balanced,
    bilinear,
    bilinear_reference,
    chi_one,
    chi_two,
    control_norms,
    norm,
    pair_norm,
    paraproduct,
)
from holowave.spectral import ComplexField, make_grid


def exp_mode(grid, k, amp=1.0):
    return ComplexField.single_mode(grid, k, amp)


def random_field(grid, rng, kmax, holomorphic=False, decay=0.0):
    modes = np.zeros(grid.n_modes, dtype=np.complex128)
    lo = max(-kmax, -grid.k_max + 1)
    hi = 0 if holomorphic else min(kmax, grid.k_max)
    for k in range(lo, hi + 1):
        if k == 0:
            continue
        z = rng.standard_normal() + 1j * rng.standard_normal()
        modes[grid.index_of(k)] = z * abs(k) ** (-decay) if decay else z
    return ComplexField(grid, modes)


class SimpleState:
    def __init__(self, W, R):
        self.W = W
        self.R = R


class TestCutoffs:
    def test_chi_one_plateaus(self):
        assert chi_one(np.array(1.0), np.array(64.0)) == pytest.approx(1.0)
        assert chi_one(np.array(1.0), np.array(3.0)) == pytest.approx(0.0)

    def test_partition_of_windows(self):
        rng = np.random.default_rng(0)
        x = rng.uniform(-50, 50, size=200)
        y = rng.uniform(-50, 50, size=200)
        total = chi_one(x, y) + chi_one(y, x) + chi_two(x, y)
        assert np.allclose(total, 1.0, atol=1e-14)

    def test_params_validation(self):
        with pytest.raises(ValueError):
            CutoffParams(eps1=0.2, eps2=0.1)


class TestParaproduct:
    def test_constant_coefficient(self):
        grid = make_grid(256)
        u = exp_mode(grid, -4)
        a = ComplexField.constant(grid, 3.0 - 1j)
        out = paraproduct(a, u)
        assert out.mode(-4) == pytest.approx(3.0 - 1j)

    def test_low_high_passes(self):
        grid = make_grid(256)
        out = paraproduct(exp_mode(grid, -1), exp_mode(grid, -64))
        assert out.mode(-65) == pytest.approx(1.0)

    def test_comparable_frequencies_blocked(self):
        grid = make_grid(256)
        out = paraproduct(exp_mode(grid, -1), exp_mode(grid, -2))
        assert abs(out.mode(-3)) == 0.0

    def test_grid_mismatch(self):
        with pytest.raises(ValueError):
            paraproduct(exp_mode(make_grid(32), -1), exp_mode(make_grid(64), -1))


class TestBalanced:
    def test_zero_factor(self):
        grid = make_grid(128)
        z = ComplexField.zero(grid)
        u = exp_mode(grid, -3)
        assert np.max(np.abs(balanced(z, u).modes)) == 0.0

    def test_partition_identity_single_modes(self):
        grid = make_grid(128)
        a = exp_mode(grid, -5, 1.2)
        u = exp_mode(grid, -5, 0.7 - 0.3j)
        total = paraproduct(a, u) + paraproduct(u, a) + balanced(a, u)
        prod = a.mult(u)
        assert np.max(np.abs(total.modes - prod.modes)) < 1e-13

    def test_comparable_pair_lands_in_balanced(self):
        grid = make_grid(128)
        a, u = exp_mode(grid, -3), exp_mode(grid, -4)
        pi = balanced(a, u)
        assert abs(pi.mode(-7)) == pytest.approx(1.0)

    def test_partition_identity_random(self):
        grid = make_grid(512)
        rng = np.random.default_rng(42)
        for _ in range(10):
            a = random_field(grid, rng, kmax=grid.k_max // 2)
            u = random_field(grid, rng, kmax=grid.k_max // 2)
            lhs = a.mult(u)
            rhs = paraproduct(a, u) + paraproduct(u, a) + balanced(a, u)
            scale = max(1.0, np.max(np.abs(lhs.modes)))
            assert np.max(np.abs(lhs.modes - rhs.modes)) <= 1e-13 * scale


class TestBilinear:
    def test_product_symbol_pair(self):
        grid = make_grid(256)
        sym = BilinearSymbol(lambda xi, eta: (xi * eta).astype(np.complex128))
        u, v = exp_mode(grid, -1), exp_mode(grid, -64)
        out = bilinear(sym, u, v)
        assert out.mode(-65) == pytest.approx(64.0)

    def test_unit_symbol_is_windowed_paraproduct(self):
        # with m = 1 the low-high holomorphic form reduces to the chi_1 window
        grid = make_grid(256)
        sym = BilinearSymbol.one()
        u, v = exp_mode(grid, -2, 0.5j), exp_mode(grid, -100, 2.0)
        out = bilinear(sym, u, v)
        w = float(chi_one(np.array(-2.0), np.array(-102.0)))
        assert out.mode(-102) == pytest.approx(0.5j * 2.0 * w)

    def test_mixed_quantization_brute_force(self):
        grid = make_grid(64)
        rng = np.random.default_rng(1)
        sym = BilinearSymbol.one(quantization="mixed")
        u = random_field(grid, rng, kmax=12, holomorphic=True)
        v = random_field(grid, rng, kmax=12, holomorphic=True)
        fast = bilinear(sym, u, v)
        slow = bilinear_reference(sym, u, v)
        assert np.max(np.abs(fast.modes - slow.modes)) < 1e-12

    def test_mixed_single_pair(self):
        # u at -1 (conjugated), v at -64: output eta = -63 < 0 is projected out
        grid = make_grid(256)
        sym = BilinearSymbol.one(quantization="mixed")
        out = bilinear(sym, exp_mode(grid, -1), exp_mode(grid, -64))
        slow = bilinear_reference(sym, exp_mode(grid, -1), exp_mode(grid, -64))
        assert np.max(np.abs(out.modes - slow.modes)) < 1e-14
        assert abs(out.mode(-63)) == 0.0

    @pytest.mark.parametrize("region,quant", [("low_high", "holomorphic"),
                                              ("high_high", "holomorphic"),
                                              ("low_high", "mixed"),
                                              ("high_high", "mixed")])
    def test_reference_agreement(self, region, quant):
        grid = make_grid(64)
        rng = np.random.default_rng(hash((region, quant)) % 2 ** 31)
        sym = BilinearSymbol(lambda xi, eta: (1.0 + 0.1 * xi + 0.05 * eta ** 2).astype(np.complex128),
                             region=region, quantization=quant)
        u = random_field(grid, rng, kmax=20)
        v = random_field(grid, rng, kmax=20)
        fast = bilinear(sym, u, v)
        slow = bilinear_reference(sym, u, v)
        scale = max(1.0, np.max(np.abs(slow.modes)))
        assert np.max(np.abs(fast.modes - slow.modes)) <= 1e-10 * scale

    def test_pole_reported(self):
        grid = make_grid(64)
        sym = BilinearSymbol(lambda xi, eta: 1.0 / (xi + eta + 21.0))
        with pytest.raises(ArithmeticError, match="symbol evaluation failed"):
            with np.errstate(divide="ignore", invalid="ignore"):
                bilinear(sym, exp_mode(grid, -1), exp_mode(grid, -20))


class TestOperatorBounds:
    @pytest.mark.parametrize("s,m", [(1.5, 0.0), (1.5, 0.25), (0.0, 0.5)])
    def test_low_high_bound(self, s, m):
        grid = make_grid(256)
        rng = np.random.default_rng(int(10 * (s + m)))
        for _ in range(5):
            a = random_field(grid, rng, kmax=60, decay=0.5)
            u = random_field(grid, rng, kmax=60, decay=0.5)
            lhs = norm(paraproduct(a, u), SpaceSpec("sobolev", s - m))
            rhs = norm(a, SpaceSpec("zygmund", -m)) * norm(u, SpaceSpec("sobolev", s))
            assert lhs <= 50.0 * rhs

    @pytest.mark.parametrize("alpha,beta", [(0.5, 0.5), (1.0, 0.25)])
    def test_balanced_bound(self, alpha, beta):
        grid = make_grid(256)
        rng = np.random.default_rng(int(100 * (alpha + beta)))
        for _ in range(5):
            a = random_field(grid, rng, kmax=60, decay=0.5)
            u = random_field(grid, rng, kmax=60, decay=0.5)
            lhs = norm(balanced(a, u), SpaceSpec("sobolev", alpha + beta))
            rhs = norm(a, SpaceSpec("zygmund", alpha)) * norm(u, SpaceSpec("sobolev", beta))
            assert lhs <= 50.0 * rhs


class TestNorms:
    def test_sobolev_single_mode(self):
        grid = make_grid(64)
        for s in (0.0, 0.5, 1.5, 2.0):
            val = norm(exp_mode(grid, -1), SpaceSpec("sobolev", s))
            assert val == pytest.approx(np.sqrt(2 * np.pi) * 2 ** (s / 2))

    def test_zygmund_mode_eight(self):
        grid = make_grid(64)
        val = norm(exp_mode(grid, -8), SpaceSpec("zygmund", 1.0))
        assert 4.0 <= val <= 16.0

    def test_product_norm(self):
        grid = make_grid(64)
        w = exp_mode(grid, -1)
        r = ComplexField.zero(grid)
        val = pair_norm(w, r, SpaceSpec("product", 0.0))
        assert val == pytest.approx(np.sqrt(2 * np.pi) * 2 ** 0.75)

    def test_besov_collapses_to_sobolev_like(self):
        grid = make_grid(128)
        rng = np.random.default_rng(9)
        f = random_field(grid, rng, kmax=40)
        b = norm(f, SpaceSpec("besov", 0.0, p=np.inf, q=np.inf))
        z = norm(f, SpaceSpec("zygmund", 0.0))
        assert b == pytest.approx(z)

    def test_homogeneity(self):
        grid = make_grid(128)
        rng = np.random.default_rng(21)
        f = random_field(grid, rng, kmax=30)
        c = 2.7 - 1.1j
        for spec in [SpaceSpec("sobolev", 1.0), SpaceSpec("zygmund", 0.5),
                     SpaceSpec("besov", 0.25, p=4, q=1), SpaceSpec("lp_sobolev", 0.5, p=4)]:
            assert norm(c * f, spec) == pytest.approx(abs(c) * norm(f, spec), rel=1e-12)

    def test_lp_sobolev_single_mode(self):
        grid = make_grid(64)
        val = norm(exp_mode(grid, -3), SpaceSpec("lp_sobolev", 2.0, p=4))
        # |exp| = 1 pointwise, weight <k>^2 = 10, L^4 over the period
        assert val == pytest.approx(10.0 * (2 * np.pi) ** 0.25)


class TestControlNorms:
    def test_zero_state(self):
        grid = make_grid(64)
        z = ComplexField.zero(grid)
        a, sharp, flags = control_norms(SimpleState(z, z))
        assert a[0.0] == 0.0 and sharp[0.0] == 0.0

    def test_single_mode_scalings(self):
        # A_0 for W = delta e^{ik alpha} grows like k^eps (scale-invariant up
        # to eps); A_sharp_{7/4} grows like <k>^{2+eps'}
        grid = make_grid(512)
        delta, eps, epsp = 1e-3, 0.01, 0.02
        a_lo, sharp_lo, _ = control_norms(
            SimpleState(exp_mode(grid, -16, delta), ComplexField.zero(grid)),
            eps, epsp, s_values=(0.0, 1.75))
        a_hi, sharp_hi, _ = control_norms(
            SimpleState(exp_mode(grid, -32, delta), ComplexField.zero(grid)),
            eps, epsp, s_values=(0.0, 1.75))
        assert a_hi[0.0] / a_lo[0.0] == pytest.approx(2 ** eps, rel=1e-6)
        ratio = sharp_hi[1.75] / sharp_lo[1.75]
        expected = (1 + 32 ** 2) ** ((2 + epsp) / 2) / (1 + 16 ** 2) ** ((2 + epsp) / 2)
        assert ratio == pytest.approx(expected, rel=1e-6)

    def test_embedding_flag(self):
        grid = make_grid(256)
        rng = np.random.default_rng(33)
        W = random_field(grid, rng, kmax=50, holomorphic=True, decay=1.0)
        R = random_field(grid, rng, kmax=50, holomorphic=True, decay=1.0)
        _, _, flags = control_norms(SimpleState(W, R))
        assert all(flags.values())
