"""holowave: spectral simulation and exact verification of deep hydroelastic waves."""

__version__ = "0.1.0"
