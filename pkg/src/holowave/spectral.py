"""Periodic Fourier infrastructure.

Everything downstream (paraproducts, the wave model, energies) lives on a
uniform grid over one period of the alpha-line.  A field is stored by its
Fourier coefficients with the convention

    f(alpha) = sum_k  fhat(k) exp(i*k*alpha),   k = m * (2*pi/period),

so the forward transform carries the 1/n factor and the inverse is the plain
unnormalized sum.  Wavenumber indices run over -n/2+1 .. n/2 (the Nyquist
index is +n/2, not -n/2); holomorphic fields are supported on k <= 0.

Zero-mode conventions (observable, so fixed once and for all):
  * the Hilbert transform annihilates constants,
  * the holomorphic projection P = (I - iH)/2 keeps half of the mean,
    and its conjugate Pbar keeps the other half.

All operations are pure functions of immutable values; cached FFT data is
never mutated after construction, so concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

import numpy as np

__all__ = [
    "SpectralGrid",
    "ComplexField",
    "MultiplierSpec",
    "make_grid",
    "transform",
    "apply_multiplier",
    "lp_decompose",
    "lp_block_weights",
    "num_lp_blocks",
]


# --------------------------------------------------------------------------
# grid
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SpectralGrid:
    """Uniform periodic grid with its integer mode layout.

    Attributes:
        n_modes: number of collocation points (even, >= 8)
        period: length of the alpha-interval
    """

    n_modes: int
    period: float = 2.0 * np.pi

    def __post_init__(self):
        if self.n_modes < 8 or self.n_modes % 2 != 0:
            raise ValueError("n_modes must be even and >= 8")
        if not (self.period > 0):
            raise ValueError("period must be positive")

    @property
    def spacing(self) -> float:
        return self.period / self.n_modes

    @property
    def nodes(self) -> np.ndarray:
        """Collocation points alpha_j = j * spacing, j = 0..n-1."""
        return np.arange(self.n_modes) * self.spacing

    @property
    def mode_indices(self) -> np.ndarray:
        """Integer mode indices in FFT storage order; Nyquist is +n/2."""
        n = self.n_modes
        idx = np.fft.fftfreq(n, d=1.0 / n).astype(np.int64)
        idx[n // 2] = n // 2
        return idx

    @property
    def wavenumbers(self) -> np.ndarray:
        """Physical wavenumbers k = m * 2*pi/period, FFT storage order."""
        return self.mode_indices * (2.0 * np.pi / self.period)

    @property
    def k_max(self) -> int:
        return self.n_modes // 2

    def index_of(self, mode: int) -> int:
        """Position of integer mode `mode` in the storage order."""
        n = self.n_modes
        if not (-n // 2 + 1 <= mode <= n // 2):
            raise ValueError(f"mode {mode} outside layout of n={n}")
        return mode % n


def make_grid(n_modes: int, period: float = 2.0 * np.pi) -> SpectralGrid:
    return SpectralGrid(int(n_modes), float(period))


# --------------------------------------------------------------------------
# fields
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ComplexField:
    """A periodic complex-valued function stored by Fourier coefficients.

    `modes[j]` is the coefficient of exp(i k_j alpha) with k_j from
    `grid.wavenumbers` (FFT storage order).
    """

    grid: SpectralGrid
    modes: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.modes.shape != (self.grid.n_modes,):
            raise ValueError("modes length must equal n_modes")
        object.__setattr__(self, "modes", np.asarray(self.modes, dtype=np.complex128))
        self.modes.setflags(write=False)

    # construction -----------------------------------------------------

    @classmethod
    def from_values(cls, grid: SpectralGrid, values) -> "ComplexField":
        values = np.asarray(values, dtype=np.complex128)
        if values.shape != (grid.n_modes,):
            raise ValueError("values length must equal n_modes")
        return cls(grid, np.fft.fft(values) / grid.n_modes)

    @classmethod
    def from_modes(cls, grid: SpectralGrid, modes) -> "ComplexField":
        return cls(grid, np.array(modes, dtype=np.complex128))

    @classmethod
    def zero(cls, grid: SpectralGrid) -> "ComplexField":
        return cls(grid, np.zeros(grid.n_modes, dtype=np.complex128))

    @classmethod
    def single_mode(cls, grid: SpectralGrid, mode: int, amplitude: complex = 1.0) -> "ComplexField":
        modes = np.zeros(grid.n_modes, dtype=np.complex128)
        modes[grid.index_of(mode)] = amplitude
        return cls(grid, modes)

    @classmethod
    def constant(cls, grid: SpectralGrid, value: complex) -> "ComplexField":
        modes = np.zeros(grid.n_modes, dtype=np.complex128)
        modes[0] = value
        return cls(grid, modes)

    # views --------------------------------------------------------------

    @property
    def values(self) -> np.ndarray:
        return np.fft.ifft(self.modes) * self.grid.n_modes

    def mode(self, mode: int) -> complex:
        return complex(self.modes[self.grid.index_of(mode)])

    @property
    def mean(self) -> complex:
        return complex(self.modes[0])

    # algebra --------------------------------------------------------------

    def __add__(self, other: "ComplexField") -> "ComplexField":
        self._check(other)
        return ComplexField(self.grid, self.modes + other.modes)

    def __sub__(self, other: "ComplexField") -> "ComplexField":
        self._check(other)
        return ComplexField(self.grid, self.modes - other.modes)

    def __mul__(self, scalar: complex) -> "ComplexField":
        return ComplexField(self.grid, self.modes * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "ComplexField":
        return ComplexField(self.grid, -self.modes)

    def conj(self) -> "ComplexField":
        """Complex conjugate; mode k of conj(f) is conj(fhat(-k))."""
        n = self.grid.n_modes
        flipped = np.conj(self.modes)[np.r_[0, np.arange(n - 1, 0, -1)]]
        return ComplexField(self.grid, flipped)

    def mult(self, other: "ComplexField") -> "ComplexField":
        """Pointwise product on the 2x zero-padded grid, truncated back.

        Exact for quadratic products of resolved modes.
        """
        self._check(other)
        a = _pad_values(self)
        b = _pad_values(other)
        return _truncate_values(self.grid, a * b)

    def div(self, other: "ComplexField") -> "ComplexField":
        """Pointwise quotient on the 2x zero-padded grid, truncated back."""
        self._check(other)
        a = _pad_values(self)
        b = _pad_values(other)
        return _truncate_values(self.grid, a / b)

    def recip(self) -> "ComplexField":
        a = _pad_values(self)
        return _truncate_values(self.grid, 1.0 / a)

    def power(self, exponent: float) -> "ComplexField":
        """Pointwise real power (principal branch) on the padded grid."""
        a = _pad_values(self)
        return _truncate_values(self.grid, a ** exponent)

    def real_part(self) -> "ComplexField":
        return 0.5 * (self + self.conj())

    def imag_part(self) -> "ComplexField":
        return (-0.5j) * (self - self.conj())

    # calculus shortcuts -----------------------------------------------

    def deriv(self, order: int = 1) -> "ComplexField":
        return apply_multiplier(self, MultiplierSpec.derivative(order))

    def norm_l2(self) -> float:
        """L^2 norm over one period (Plancherel on mode side)."""
        return float(np.sqrt(np.sum(np.abs(self.modes) ** 2) * self.grid.period))

    def norm_inf(self) -> float:
        return float(np.max(np.abs(self.values)))

    def _check(self, other: "ComplexField") -> None:
        if other.grid is not self.grid and other.grid != self.grid:
            raise ValueError("fields live on different grids")


def _pad_values(f: ComplexField) -> np.ndarray:
    """Values of f sampled on the 2x refined grid (zero-padded modes)."""
    n = f.grid.n_modes
    padded = np.zeros(2 * n, dtype=np.complex128)
    half = n // 2
    padded[: half + 1] = f.modes[: half + 1]
    padded[-(half - 1):] = f.modes[-(half - 1):]
    return np.fft.ifft(padded) * (2 * n)


def _truncate_values(grid: SpectralGrid, values_fine: np.ndarray) -> ComplexField:
    """Back to modes on the coarse grid, dropping modes beyond |n/2|."""
    n = grid.n_modes
    modes_fine = np.fft.fft(values_fine) / (2 * n)
    half = n // 2
    modes = np.zeros(n, dtype=np.complex128)
    modes[: half + 1] = modes_fine[: half + 1]
    modes[-(half - 1):] = modes_fine[-(half - 1):]
    return ComplexField(grid, modes)


def transform(field_or_array, grid: SpectralGrid | None = None,
              direction: Literal["to_modes", "to_values"] = "to_modes"):
    """Round-trippable transform between grid samples and mode coefficients.

    Accepts a ComplexField (returns the other representation as an ndarray)
    or a raw ndarray together with `grid`.
    """
    if isinstance(field_or_array, ComplexField):
        if direction == "to_values":
            return field_or_array.values
        return np.array(field_or_array.modes)
    if grid is None:
        raise ValueError("grid required for raw arrays")
    arr = np.asarray(field_or_array, dtype=np.complex128)
    if direction == "to_modes":
        return np.fft.fft(arr) / grid.n_modes
    return np.fft.ifft(arr) * grid.n_modes


# --------------------------------------------------------------------------
# multipliers
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class MultiplierSpec:
    """A Fourier multiplier m(k).

    kind: one of 'derivative', 'fractional', 'hilbert', 'proj_P',
    'proj_Pbar', 'lp_block', 'dealias_mask'.
    """

    kind: str
    order: int = 0
    s: float = 0.0
    homogeneous: bool = True
    j: int = 0
    fraction: float = 1.0

    @classmethod
    def derivative(cls, order: int) -> "MultiplierSpec":
        return cls("derivative", order=int(order))

    @classmethod
    def fractional(cls, s: float, homogeneous: bool = True) -> "MultiplierSpec":
        return cls("fractional", s=float(s), homogeneous=homogeneous)

    @classmethod
    def hilbert(cls) -> "MultiplierSpec":
        return cls("hilbert")

    @classmethod
    def proj_P(cls) -> "MultiplierSpec":
        return cls("proj_P")

    @classmethod
    def proj_Pbar(cls) -> "MultiplierSpec":
        return cls("proj_Pbar")

    @classmethod
    def lp_block(cls, j: int) -> "MultiplierSpec":
        if j < 0:
            raise ValueError("block index must be nonnegative")
        return cls("lp_block", j=int(j))

    @classmethod
    def dealias_mask(cls, fraction: float) -> "MultiplierSpec":
        if not (0.0 < fraction <= 1.0):
            raise ValueError("dealias fraction must lie in (0, 1]")
        return cls("dealias_mask", fraction=float(fraction))


def _raised_cosine_block(j: int, mode_abs: np.ndarray) -> np.ndarray:
    """Raised-cosine dyadic bump on log2|m|, one octave of overlap.

    Block 0 equals 1 for |m| <= 1 and decays to 0 at |m| = 2; block j >= 1
    is cos^2(pi/2 (log2|m| - j)) on [2^(j-1), 2^(j+1)].  The family sums to
    one exactly at every integer mode.
    """
    out = np.zeros_like(mode_abs, dtype=np.float64)
    pos = mode_abs > 0
    t = np.zeros_like(mode_abs, dtype=np.float64)
    t[pos] = np.log2(mode_abs[pos])
    if j == 0:
        out[(mode_abs <= 1)] = 1.0
        ramp = pos & (t > 0) & (t < 1)
        out[ramp] = np.cos(0.5 * np.pi * t[ramp]) ** 2
    else:
        ramp = pos & (np.abs(t - j) < 1)
        out[ramp] = np.cos(0.5 * np.pi * (t[ramp] - j)) ** 2
    return out


def num_lp_blocks(grid: SpectralGrid) -> int:
    """Number of blocks needed to cover all resolved modes."""
    j = 0
    while 2 ** j < grid.k_max:
        j += 1
    return j + 1


def lp_block_weights(grid: SpectralGrid, j: int) -> np.ndarray:
    return _raised_cosine_block(j, np.abs(grid.mode_indices).astype(np.float64))


def multiplier_values(grid: SpectralGrid, spec: MultiplierSpec) -> np.ndarray:
    """The multiplier m(k) sampled on the grid's mode layout."""
    k = grid.wavenumbers
    m_idx = grid.mode_indices
    if spec.kind == "derivative":
        p = spec.order
        if p >= 0:
            return (1j * k) ** p
        vals = np.zeros_like(k, dtype=np.complex128)
        nz = m_idx != 0
        vals[nz] = (1j * k[nz]) ** p
        return vals
    if spec.kind == "fractional":
        if spec.homogeneous:
            vals = np.zeros_like(k, dtype=np.complex128)
            nz = m_idx != 0
            vals[nz] = np.abs(k[nz]) ** spec.s
            return vals
        return (1.0 + k ** 2) ** (spec.s / 2.0) + 0j
    if spec.kind == "hilbert":
        return -1j * np.sign(m_idx)
    if spec.kind == "proj_P":
        return np.where(m_idx < 0, 1.0, 0.0) + np.where(m_idx == 0, 0.5, 0.0) + 0j
    if spec.kind == "proj_Pbar":
        return np.where(m_idx > 0, 1.0, 0.0) + np.where(m_idx == 0, 0.5, 0.0) + 0j
    if spec.kind == "lp_block":
        if 2 ** spec.j > grid.k_max:
            raise ValueError(f"lp block {spec.j} beyond resolved modes (k_max={grid.k_max})")
        return lp_block_weights(grid, spec.j) + 0j
    if spec.kind == "dealias_mask":
        cutoff = spec.fraction * grid.k_max
        return np.where(np.abs(m_idx) <= cutoff, 1.0, 0.0) + 0j
    raise ValueError(f"unknown multiplier kind {spec.kind!r}")


def apply_multiplier(f: ComplexField, spec: MultiplierSpec) -> ComplexField:
    if spec.kind == "derivative" and spec.order < 0 and abs(f.mean) > 1e-13 * max(1.0, float(np.max(np.abs(f.modes)))):
        raise ValueError("antiderivative needs mean-zero input")
    return ComplexField(f.grid, f.modes * multiplier_values(f.grid, spec))


# convenience wrappers used throughout the model layer ----------------------


def proj_P(f: ComplexField) -> ComplexField:
    return apply_multiplier(f, MultiplierSpec.proj_P())


def proj_Pbar(f: ComplexField) -> ComplexField:
    return apply_multiplier(f, MultiplierSpec.proj_Pbar())


def lp_decompose(f: ComplexField) -> list[ComplexField]:
    """Littlewood-Paley pieces; they sum back to f exactly.

    Uses the bump weights directly so the partition closes even when the
    top block's center falls beyond k_max (non power-of-two grids).
    """
    return [ComplexField(f.grid, f.modes * lp_block_weights(f.grid, j))
            for j in range(num_lp_blocks(f.grid))]
