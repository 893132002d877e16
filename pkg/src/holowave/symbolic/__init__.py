"""Exact rational-function algebra and symbol-system verification."""

from .catalog import CATALOG, LeadingClaim, SymbolSystem, Variant, catalog, get_system
from .rational import Poly, RationalFunction, poly, rational, solve_linear_system
from .verify import (
    SystemReport,
    UnknownVerdict,
    denominator_nonvanishing,
    format_report,
    four_wave_scan,
    residual_is_zero,
    solve_system,
    three_wave_identity,
    verify_all,
    verify_system,
)

__all__ = [
    "CATALOG", "LeadingClaim", "SymbolSystem", "Variant", "catalog", "get_system",
    "Poly", "RationalFunction", "poly", "rational", "solve_linear_system",
    "SystemReport", "UnknownVerdict", "denominator_nonvanishing", "format_report",
    "four_wave_scan", "residual_is_zero", "solve_system", "three_wave_identity",
    "verify_all", "verify_system",
]
