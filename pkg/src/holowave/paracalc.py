"""Numerical paradifferential calculus.

Paraproducts T_a u keep the coefficient a at low frequency relative to u;
the balanced product Pi(a,u) = a*u - T_a u - T_u a collects comparable
frequencies.  Bilinear forms in Weyl quantization carry a symbol m and a
frequency-region window; a slow reference evaluation and a vectorized path
are both provided and must agree.

Cutoff geometry: the paraproduct window is a quintic ramp in
|theta|/(1 + |eta|) between eps1 = 1/20 and eps2 = 1/10, so it shares its
cone with the homogeneous low-high window chi1 (ramp in |theta1|/|theta2|
between the same thresholds).  The balanced window is the exact complement
chi2 = 1 - chi1(x, y) - chi1(y, x).  The low-frequency floor psi vanishes
on the mean mode and equals one from the first nonzero mode up.

All functions are pure; nothing here mutates shared state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal, Sequence

import numpy as np

from .spectral import (
    ComplexField,
    MultiplierSpec,
    SpectralGrid,
    apply_multiplier,
    lp_block_weights,
    num_lp_blocks,
)

__all__ = [
    "CutoffParams",
    "BilinearSymbol",
    "SpaceSpec",
    "paraproduct",
    "balanced",
    "bilinear",
    "bilinear_reference",
    "trilinear_integral",
    "norm",
    "pair_norm",
    "control_norms",
    "chi_one",
    "chi_two",
]


# --------------------------------------------------------------------------
# cutoffs
# --------------------------------------------------------------------------


def _smoothstep(x: np.ndarray) -> np.ndarray:
    """Quintic ramp: 0 below 0, 1 above 1, C^2 at both ends."""
    y = np.clip(x, 0.0, 1.0)
    return y * y * y * (10.0 + y * (-15.0 + 6.0 * y))


@dataclass(frozen=True)
class CutoffParams:
    """Cone thresholds for the paraproduct and bilinear windows."""

    eps1: float = 0.05
    eps2: float = 0.10
    psi_low: float = 0.20
    psi_high: float = 0.25

    def __post_init__(self):
        if not (0.0 < self.eps1 < self.eps2 < 1.0):
            raise ValueError("need 0 < eps1 < eps2 < 1")

    def chi(self, theta: np.ndarray, eta: np.ndarray) -> np.ndarray:
        """Inhomogeneous window chi(theta, eta): 1 on |theta| <= eps1(1+|eta|)."""
        ratio = np.abs(theta) / (1.0 + np.abs(eta))
        return 1.0 - _smoothstep((ratio - self.eps1) / (self.eps2 - self.eps1))

    def psi(self, eta: np.ndarray) -> np.ndarray:
        """Low-frequency floor in fundamental-wavenumber units."""
        return _smoothstep((np.abs(eta) - self.psi_low) / (self.psi_high - self.psi_low))


DEFAULT_CUTOFFS = CutoffParams()


def chi_one(theta1: np.ndarray, theta2: np.ndarray,
            params: CutoffParams = DEFAULT_CUTOFFS) -> np.ndarray:
    """Homogeneous low-high window: 1 for |theta1| <= |theta2|/20, 0 beyond /10."""
    theta1 = np.asarray(theta1, dtype=np.float64)
    theta2 = np.asarray(theta2, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(np.abs(theta2) > 0, np.abs(theta1) / np.maximum(np.abs(theta2), 1e-300), np.inf)
    ratio = np.where((np.abs(theta1) == 0) & (np.abs(theta2) == 0), np.inf, ratio)
    return 1.0 - _smoothstep((ratio - params.eps1) / (params.eps2 - params.eps1))


def chi_two(theta1: np.ndarray, theta2: np.ndarray,
            params: CutoffParams = DEFAULT_CUTOFFS) -> np.ndarray:
    """Balanced window; complements the two low-high windows exactly."""
    return 1.0 - chi_one(theta1, theta2, params) - chi_one(theta2, theta1, params)


# --------------------------------------------------------------------------
# paraproducts
# --------------------------------------------------------------------------


def _mode_coeff_table(f: ComplexField) -> tuple[np.ndarray, int]:
    """Coefficients indexed by integer mode + offset, zero off the layout."""
    n = f.grid.n_modes
    table = np.zeros(2 * n + 1, dtype=np.complex128)
    idx = f.grid.mode_indices
    table[idx + n] = f.modes
    return table, n


def paraproduct(a: ComplexField, u: ComplexField,
                params: CutoffParams = DEFAULT_CUTOFFS) -> ComplexField:
    """T_a u by the exact windowed mode convolution.

    (T_a u)^(k) = sum_m chi(k - m, m) psi(m) ahat(k - m) uhat(m), with all
    frequencies in physical units.  Dense O(n^2) evaluation, vectorized.
    """
    if a.grid != u.grid:
        raise ValueError("fields live on different grids")
    grid = a.grid
    scale = 2.0 * np.pi / grid.period
    m_idx = grid.mode_indices
    k_out = m_idx[:, None].astype(np.float64)
    m_in = m_idx[None, :].astype(np.float64)
    theta = k_out - m_in
    window = params.chi(theta * scale, m_in * scale) * params.psi(m_in)
    table, off = _mode_coeff_table(a)
    theta_int = (m_idx[:, None] - m_idx[None, :])
    coeff = table[np.clip(theta_int + off, 0, 2 * grid.n_modes)]
    coeff = np.where(np.abs(theta_int) <= grid.n_modes, coeff, 0.0)
    out = (window * coeff) @ u.modes
    return ComplexField(grid, out)


def balanced(a: ComplexField, u: ComplexField,
             params: CutoffParams = DEFAULT_CUTOFFS) -> ComplexField:
    """Pi(a, u) = a*u - T_a u - T_u a with identical cutoffs.

    The product uses the 2x padded grid, so the partition identity holds
    exactly on resolved modes.
    """
    return a.mult(u) - paraproduct(a, u, params) - paraproduct(u, a, params)


# --------------------------------------------------------------------------
# bilinear forms in Weyl quantization
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class BilinearSymbol:
    """A bilinear multiplier with its region window and quantization.

    evaluator: callable (xi, eta) -> complex array; xi is the frequency of
    the first factor (conjugated in the mixed quantization) and eta the
    second-slot frequency (the full frequency of v for 'mixed').
    """

    evaluator: Callable[[np.ndarray, np.ndarray], np.ndarray]
    region: Literal["low_high", "high_high"] = "low_high"
    quantization: Literal["holomorphic", "mixed"] = "holomorphic"

    @classmethod
    def one(cls, region="low_high", quantization="holomorphic") -> "BilinearSymbol":
        return cls(lambda xi, eta: np.ones(np.broadcast(xi, eta).shape, dtype=np.complex128),
                   region, quantization)


def _region_window(sym: BilinearSymbol, first: np.ndarray, second: np.ndarray,
                   params: CutoffParams) -> np.ndarray:
    if sym.region == "low_high":
        return chi_one(first, second, params)
    return chi_two(first, second, params)


def _eval_symbol(sym: BilinearSymbol, xi: np.ndarray, eta: np.ndarray,
                 support: np.ndarray) -> np.ndarray:
    vals = np.asarray(sym.evaluator(xi, eta), dtype=np.complex128)
    bad = support & ~np.isfinite(vals)
    if np.any(bad):
        xi_b, eta_b = np.broadcast_arrays(xi, eta)
        i = tuple(np.argwhere(bad)[0])
        raise ArithmeticError(
            f"symbol evaluation failed at (xi, eta) = ({xi_b[i]}, {eta_b[i]})")
    return np.where(support, vals, 0.0)


def bilinear(sym: BilinearSymbol, u: ComplexField, v: ComplexField,
             params: CutoffParams = DEFAULT_CUTOFFS) -> ComplexField:
    """Windowed bilinear form, vectorized over all mode pairs.

    holomorphic:  out(zeta) = sum_{xi+eta=zeta} chi_r(xi, zeta) m(xi, eta)
                              uhat(xi) vhat(eta)
    mixed:        out(eta)  = 1_{eta>0} sum_{zeta-xi=eta} chi_r(xi, eta)
                              m(xi, zeta) conj(uhat(xi)) vhat(zeta),
                  with the mean output mode kept at half weight.
    """
    if u.grid != v.grid:
        raise ValueError("fields live on different grids")
    grid = u.grid
    scale = 2.0 * np.pi / grid.period
    m_idx = grid.mode_indices
    n = grid.n_modes
    out = np.zeros(n, dtype=np.complex128)

    if sym.quantization == "holomorphic":
        xi = m_idx[:, None].astype(np.float64) * scale
        eta = m_idx[None, :].astype(np.float64) * scale
        zeta_int = m_idx[:, None] + m_idx[None, :]
        window = _region_window(sym, xi, xi + eta, params)
        support = window > 0
        vals = _eval_symbol(sym, xi, eta, support)
        contrib = window * vals * u.modes[:, None] * v.modes[None, :]
        valid = (zeta_int >= -n // 2 + 1) & (zeta_int <= n // 2)
        np.add.at(out, np.where(valid, zeta_int % n, 0), np.where(valid, contrib, 0.0))
    else:
        xi = m_idx[:, None].astype(np.float64) * scale
        zeta = m_idx[None, :].astype(np.float64) * scale
        eta_int = m_idx[None, :] - m_idx[:, None]
        window = _region_window(sym, xi, zeta - xi, params)
        support = window > 0
        vals = _eval_symbol(sym, xi, zeta, support)
        weight = np.where(eta_int > 0, 1.0, np.where(eta_int == 0, 0.5, 0.0))
        contrib = weight * window * vals * np.conj(u.modes)[:, None] * v.modes[None, :]
        valid = (eta_int >= -n // 2 + 1) & (eta_int <= n // 2)
        np.add.at(out, np.where(valid, eta_int % n, 0), np.where(valid, contrib, 0.0))
    return ComplexField(grid, out)


def bilinear_reference(sym: BilinearSymbol, u: ComplexField, v: ComplexField,
                       params: CutoffParams = DEFAULT_CUTOFFS) -> ComplexField:
    """Plain double loop over mode pairs; the agreement oracle for bilinear()."""
    grid = u.grid
    scale = 2.0 * np.pi / grid.period
    m_idx = grid.mode_indices
    n = grid.n_modes
    out = np.zeros(n, dtype=np.complex128)
    for i, mi in enumerate(m_idx):
        if u.modes[i] == 0:
            continue
        for j, mj in enumerate(m_idx):
            if v.modes[j] == 0:
                continue
            if sym.quantization == "holomorphic":
                out_int = mi + mj
                if not (-n // 2 + 1 <= out_int <= n // 2):
                    continue
                xi, eta = mi * scale, mj * scale
                w = float(_region_window(sym, np.array(xi), np.array(xi + eta), params))
                if w == 0.0:
                    continue
                val = complex(np.asarray(sym.evaluator(np.array(xi), np.array(eta)),
                                         dtype=np.complex128))
                out[out_int % n] += w * val * u.modes[i] * v.modes[j]
            else:
                out_int = mj - mi
                if not (-n // 2 + 1 <= out_int <= n // 2):
                    continue
                if out_int < 0:
                    continue
                xi, zeta = mi * scale, mj * scale
                w = float(_region_window(sym, np.array(xi), np.array(zeta - xi), params))
                if w == 0.0:
                    continue
                half = 0.5 if out_int == 0 else 1.0
                val = complex(np.asarray(sym.evaluator(np.array(xi), np.array(zeta)),
                                         dtype=np.complex128))
                out[out_int % n] += half * w * val * np.conj(u.modes[i]) * v.modes[j]
    return ComplexField(grid, out)


def trilinear_integral(sym: BilinearSymbol, a: ComplexField, u: ComplexField,
                       v: ComplexField, params: CutoffParams = DEFAULT_CUTOFFS) -> complex:
    """int B(a, u) * conj(v) d(alpha) as a windowed double mode sum."""
    b = bilinear(sym, a, u, params)
    return complex(np.sum(b.modes * np.conj(v.modes)) * a.grid.period)


# --------------------------------------------------------------------------
# norms
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SpaceSpec:
    """A function-space tag for norm().

    family: 'sobolev' (H^s), 'zygmund' (C^s_*), 'besov' (B^s_{p,q}),
    'lp_sobolev' (W^{s,p}), 'product' (H^{s+3/2} x H^s) or
    'product_zygmund' (C^{s+3/2}_* x C^s_*).
    """

    family: str
    s: float
    p: float = 2.0
    q: float = 2.0

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("p, q must be >= 1")


def _lp_quadrature(values: np.ndarray, spacing: float, p: float) -> float:
    if np.isinf(p):
        return float(np.max(np.abs(values)))
    return float((np.sum(np.abs(values) ** p) * spacing) ** (1.0 / p))


def _sobolev(f: ComplexField, s: float) -> float:
    k = f.grid.wavenumbers
    w = (1.0 + k ** 2) ** s
    return float(np.sqrt(np.sum(w * np.abs(f.modes) ** 2) * f.grid.period))


def _block_lp(f: ComplexField, p: float) -> np.ndarray:
    grid = f.grid
    out = []
    for j in range(num_lp_blocks(grid)):
        piece = ComplexField(grid, f.modes * lp_block_weights(grid, j))
        out.append(_lp_quadrature(piece.values, grid.spacing, p))
    return np.asarray(out)


def _besov(f: ComplexField, s: float, p: float, q: float) -> float:
    seq = np.array([2.0 ** (j * s) * v for j, v in enumerate(_block_lp(f, p))])
    if np.isinf(q):
        return float(np.max(seq))
    return float(np.sum(seq ** q) ** (1.0 / q))


def _zygmund(f: ComplexField, s: float) -> float:
    return _besov(f, s, np.inf, np.inf)


def _lp_sobolev(f: ComplexField, s: float, p: float) -> float:
    g = apply_multiplier(f, MultiplierSpec.fractional(s, homogeneous=False))
    return _lp_quadrature(g.values, f.grid.spacing, p)


def norm(field, spec: SpaceSpec) -> float:
    """Norm of a field (or a (w, r) pair for the product families)."""
    if spec.family in ("product", "product_zygmund"):
        w, r = field
        return pair_norm(w, r, spec)
    f: ComplexField = field
    if spec.family == "sobolev":
        return _sobolev(f, spec.s)
    if spec.family == "zygmund":
        return _zygmund(f, spec.s)
    if spec.family == "besov":
        return _besov(f, spec.s, spec.p, spec.q)
    if spec.family == "lp_sobolev":
        return _lp_sobolev(f, spec.s, spec.p)
    raise ValueError(f"unknown space family {spec.family!r}")


def pair_norm(w: ComplexField, r: ComplexField, spec: SpaceSpec) -> float:
    """Product-space norms pairing the two evolution unknowns.

    'product':          sqrt(|w|_{H^{s+3/2}}^2 + |r|_{H^s}^2)
    'product_zygmund':  max(|w|_{C^{s+3/2}}, |r|_{C^s})
    """
    if spec.family == "product":
        return float(np.hypot(_sobolev(w, spec.s + 1.5), _sobolev(r, spec.s)))
    if spec.family == "product_zygmund":
        return max(_zygmund(w, spec.s + 1.5), _zygmund(r, spec.s))
    raise ValueError(f"{spec.family!r} is not a product family")


def control_norms(state, eps: float = 0.01, eps_prime: float = 0.02,
                  s_values: Sequence[float] = (0.0, 1.75)):
    """Scale-adapted control norms of the state, per requested index.

    A_s       = |(W, R)| in C^{s+eps}_* x C^{s-3/2+eps}_*,
    A_sharp_s = |(W, R)| in W^{s+1/4+eps',4} x W^{s-5/4+eps',4}
    (max pairing).  Also returns the Sobolev-embedding sanity flag
    A_s <= C * A_sharp_s with C = 10.

    Args:
        state: anything with ComplexField attributes W and R.
    """
    if not (0.0 < eps < eps_prime):
        raise ValueError("need 0 < eps < eps_prime")
    a_table = {}
    sharp_table = {}
    flags = {}
    for s in s_values:
        a = max(_zygmund(state.W, s + eps), _zygmund(state.R, s - 1.5 + eps))
        sharp = max(_lp_sobolev(state.W, s + 0.25 + eps_prime, 4.0),
                    _lp_sobolev(state.R, s - 1.25 + eps_prime, 4.0))
        a_table[s] = a
        sharp_table[s] = sharp
        flags[s] = a <= 10.0 * sharp + 1e-300
    return a_table, sharp_table, flags
