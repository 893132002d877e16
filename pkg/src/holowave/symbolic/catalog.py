"""Catalog of the normal-form symbol systems.

Each entry records one linear system for paradifferential bilinear-form
symbols: the coefficient matrix, the right-hand side per frequency-window
channel, the frequency region, and hand-transcribed reference formulas for
the solutions together with the leading terms they are expected to have.

The transcriptions are double-entered: this module stores them as parsed
string literals, and the test suite re-enters every matrix and right-hand
side as independent numeric lambdas evaluated at rational spot points.

Reference formulas come in variants: 'printed' is the transcription exactly
as displayed at the source, 'corrected' repairs an evident homogeneity slip
(a dropped or doubled exponent).  The independent exact solve is always the
authority; the verifier reports which variant it matches, and a mismatch is
a logged finding, never an error.

Naming: systems are keyed by what they do.  'src0'/'src1' refer to the two
families of quadratic source terms eliminated by the normal form of the
linearized flow; 'nf' to the normal form of the full evolution; 'conj' to
the Sobolev-conjugated systems whose right-hand sides mix a commutator
window (chi3) with an s-proportional low-high window (s_chi1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

__all__ = ["SymbolSystem", "Variant", "LeadingClaim", "CATALOG", "catalog",
           "RESONANCE_SEXTIC", "get_system"]


# shared denominator sextics ------------------------------------------------

# the elliptic sextic from the three-wave resonance product, in (xi, eta)
RESONANCE_SEXTIC = ("25*xi^6+100*xi^5*eta+200*xi^4*eta^2+246*xi^3*eta^3"
                    "+200*xi^2*eta^4+100*xi*eta^5+25*eta^6")
_D = "(" + RESONANCE_SEXTIC + ")"

# its analogue for the mixed (eta, zeta) systems: printed with a dropped
# exponent on the 37-term, and the corrected homogeneous form
_E_PRINTED = ("(4*eta^6-12*eta^5*zeta+37*eta^4*zeta-54*eta^3*zeta^3"
              "+75*eta^2*zeta^4-50*eta*zeta^5+25*zeta^6)")
_E = ("(4*eta^6-12*eta^5*zeta+37*eta^4*zeta^2-54*eta^3*zeta^3"
      "+75*eta^2*zeta^4-50*eta*zeta^5+25*zeta^6)")
# twice _E, as it appears in the cubic mixed and conjugated mixed systems
_E2X = ("(8*eta^6-24*eta^5*zeta+74*eta^4*zeta^2-108*eta^3*zeta^3"
        "+150*eta^2*zeta^4-100*eta*zeta^5+50*zeta^6)")


@dataclass(frozen=True)
class Variant:
    """One transcription of a reference formula."""

    kind: str  # 'printed' or 'corrected'
    num: str
    den: str
    note: str = ""


@dataclass(frozen=True)
class LeadingClaim:
    """Displayed leading term of a solved symbol, as a monomial ratio."""

    num: str
    den: str = "1"


@dataclass(frozen=True)
class SymbolSystem:
    id: str
    title: str
    variables: tuple[str, str]
    unknowns: tuple[str, ...]
    matrix: tuple[tuple[str, ...], ...]
    rhs: Mapping[str, tuple[tuple[str, str], ...]]
    region: str  # 'low_high' or 'balanced'
    indicator: str = ""
    symmetrized: bool = False
    notes: tuple[str, ...] = ()
    reference: Mapping[str, Mapping[str, tuple[Variant, ...]]] = field(default_factory=dict)
    leading: Mapping[str, LeadingClaim] = field(default_factory=dict)
    leading_mode: str = "low"  # 'low' (first variable -> 0) or 'diagonal'


def _rhs(*entries):
    """RHS column; each entry a polynomial string or a (num, den) pair."""
    out = []
    for e in entries:
        out.append(e if isinstance(e, tuple) else (e, "1"))
    return tuple(out)


_XI_ETA = ("xi", "eta")
_ETA_ZETA = ("eta", "zeta")

# matrices shared between systems (same bilinear-form ansatz shapes)
_MIXED_RBAR_MATRIX = (
    ("(zeta-eta)", "eta", "zeta^4", "0"),
    ("0", "zeta", "eta^4", "-(zeta-eta)"),
    ("zeta", "0", "(zeta-eta)^4", "-eta"),
    ("eta^4", "(zeta-eta)^4", "0", "-zeta^4"),
)
_HOLO_R_MATRIX = (
    ("(xi+eta)", "-xi", "eta^4", "0"),
    ("0", "eta", "-xi^4", "-(xi+eta)"),
    ("eta", "0", "(xi+eta)^4", "xi"),
    ("xi^4", "-(xi+eta)^4", "0", "eta^4"),
)
_HOLO_SWAPPED_MATRIX = (
    ("(xi+eta)", "-eta", "xi^4", "0"),
    ("0", "xi", "-eta^4", "-(xi+eta)"),
    ("xi", "0", "(xi+eta)^4", "eta"),
    ("eta^4", "-(xi+eta)^4", "0", "xi^4"),
)
_MIXED_SWAPPED_MATRIX = (
    ("(zeta-eta)", "-zeta", "-eta^4", "0"),
    ("0", "eta", "zeta^4", "(zeta-eta)"),
    ("eta", "0", "-(zeta-eta)^4", "-zeta"),
    ("zeta^4", "-(zeta-eta)^4", "0", "-eta^4"),
)


CATALOG: tuple[SymbolSystem, ...] = (

    # ------------------------------------------------------------------
    SymbolSystem(
        id="cubic_energy",
        title="cubic energy-correction trilinear symbols",
        variables=_XI_ETA,
        unknowns=("a", "b", "c", "d"),
        matrix=(
            ("(xi+eta)^4", "-eta^4", "xi", "0"),
            ("0", "xi^4", "-eta", "-(xi+eta)^4"),
            ("xi^4", "0", "(xi+eta)", "eta^4"),
            ("eta", "-(xi+eta)", "0", "xi"),
        ),
        rhs={"chi1": _rhs(
            "7/2*xi*eta*(xi+eta)^2 + 5/4*xi^2*(xi+eta)^2 + 3/4*xi^3*(xi+eta)",
            "-3*xi*(xi+eta)^3 + 9/2*xi^2*(xi+eta)^2 - 3*xi^3*(xi+eta)",
            "3*xi*eta^3 + 15/2*xi^2*eta^2 + 5*xi^3*eta + 2*xi^4",
            "3/2*xi",
        )},
        region="low_high",
        reference={"chi1": {
            "a": (Variant("printed",
                          "5*(15*xi^6+60*xi^5*eta+125*xi^4*eta^2+157*xi^3*eta^3"
                          "+120*xi^2*eta^4+51*xi*eta^5+8*eta^6)",
                          "4*eta*" + _D),
                  Variant("corrected",
                          "5*(15*xi^6+60*xi^5*eta+125*xi^4*eta^2+157*xi^3*eta^3"
                          "+120*xi^2*eta^4+51*xi*eta^5+8*eta^6)",
                          "4*" + _D,
                          "dropped the stray eta in the denominator (degree count)")),
            "b": (Variant("printed",
                          "-5*(14*xi^6+49*xi^5*eta+77*xi^4*eta^2+60*xi^3*eta^3"
                          "+13*xi^2*eta^4-13*xi*eta^5-8*eta^6)",
                          "4*eta*" + _D),
                  Variant("corrected",
                          "-5*(14*xi^6+49*xi^5*eta+77*xi^4*eta^2+60*xi^3*eta^3"
                          "+13*xi^2*eta^4-13*xi*eta^5-8*eta^6)",
                          "4*" + _D,
                          "dropped the stray eta in the denominator (degree count)")),
            "c": (Variant("printed",
                          "125*xi^9+875*xi^8*eta+2850*xi^7*eta^2+5633*xi^6*eta^3"
                          "+7407*xi^5*eta^4+6708*xi^4*eta^5+4134*xi^3*eta^6"
                          "+1600*xi^2*eta^7+300*xi*eta^8",
                          "4*" + _D),),
            "d": (Variant("printed",
                          "40*xi^6+105*xi^5*eta+135*xi^4*eta^2+83*xi^3*eta^3"
                          "+25*xi^2*eta^5",
                          "2*" + _D),
                  Variant("corrected",
                          "40*xi^6+105*xi^5*eta+135*xi^4*eta^2+83*xi^3*eta^3"
                          "+25*xi^2*eta^4",
                          "2*" + _D,
                          "25*xi^2*eta^5 -> 25*xi^2*eta^4 (homogeneity)")),
        }},
        leading={"a": LeadingClaim("2/5"), "b": LeadingClaim("2/5"),
                 "c": LeadingClaim("3*xi*eta^2"),
                 "d": LeadingClaim("xi^2", "2*eta^2")},
        leading_mode="low",
    ),

    # ------------------------------------------------------------------
    SymbolSystem(
        id="src0_lowhigh",
        title="low-high normal form for the first source family",
        variables=_ETA_ZETA,
        unknowns=("a", "b", "c", "d"),
        matrix=_MIXED_RBAR_MATRIX,
        rhs={"chi1": _rhs(
            "-eta", "-eta", "eta",
            "3/2*eta^4 - eta^3*zeta - eta^2*zeta^2 + 3/2*eta*zeta^3",
        )},
        region="low_high",
        reference={"chi1": {
            "a": (Variant("printed",
                          "5*(2*eta^6-5*eta^5*zeta+12*eta^4*zeta-13*eta^3*zeta^3"
                          "+12*eta^2*zeta^4-5*eta*zeta^5+2*zeta^6)",
                          "2*" + _E_PRINTED),
                  Variant("corrected",
                          "5*(2*eta^6-5*eta^5*zeta+12*eta^4*zeta^2-13*eta^3*zeta^3"
                          "+12*eta^2*zeta^4-5*eta*zeta^5+2*zeta^6)",
                          "2*" + _E,
                          "12*eta^4*zeta and 37*eta^4*zeta -> zeta^2 (homogeneity)")),
            "b": (Variant("printed",
                          "2*eta^6-11*eta^5*zeta+11*eta^4*zeta-17*eta^3*zeta^3"
                          "-25*eta^2*zeta^4+25*eta*zeta^5-25*zeta^6",
                          "2*" + _E_PRINTED),
                  Variant("corrected",
                          "2*eta^6-11*eta^5*zeta+11*eta^4*zeta^2-17*eta^3*zeta^3"
                          "-25*eta^2*zeta^4+25*eta*zeta^5-25*zeta^6",
                          "2*" + _E,
                          "11*eta^4*zeta and 37*eta^4*zeta -> zeta^2 (homogeneity)")),
            "c": (Variant("printed", "-5*zeta*(eta^2-eta*zeta+zeta^2)", _E_PRINTED),
                  Variant("corrected", "-5*zeta*(eta^2-eta*zeta+zeta^2)", _E,
                          "37*eta^4*zeta -> zeta^2 (homogeneity)")),
            "d": (Variant("printed",
                          "-(8*eta^6-24*eta^5*zeta+49*eta^4*zeta-58*eta^3*zeta^3"
                          "+75*eta^2*zeta^4-50*eta*zeta^5+25*zeta^6)",
                          "2*" + _E_PRINTED),
                  Variant("corrected",
                          "-(8*eta^6-24*eta^5*zeta+49*eta^4*zeta^2-58*eta^3*zeta^3"
                          "+75*eta^2*zeta^4-50*eta*zeta^5+25*zeta^6)",
                          "2*" + _E,
                          "49*eta^4*zeta and 37*eta^4*zeta -> zeta^2 (homogeneity)")),
        }},
        leading={"a": LeadingClaim("1/5"), "b": LeadingClaim("-1/2"),
                 "c": LeadingClaim("-1", "5*zeta^3"), "d": LeadingClaim("-1/2")},
        leading_mode="low",
    ),

    # ------------------------------------------------------------------
    SymbolSystem(
        id="src0_balanced",
        title="balanced normal form for the first source family",
        variables=_ETA_ZETA,
        unknowns=("a", "b", "c", "d"),
        matrix=_MIXED_RBAR_MATRIX,
        rhs={"chi2": _rhs(
            "-eta", "-eta", "eta",
            "3/2*eta^4 - eta^3*zeta - eta^2*zeta^2 + 3/2*eta*zeta^3",
        )},
        region="balanced",
        indicator="zeta<eta",
        reference={"chi2": {
            "a": (Variant("printed",
                          "5*(2*eta^6-5*eta^5*zeta+12*eta^4*zeta^2-13*eta^3*zeta^3"
                          "+12*eta^2*zeta^4-5*eta*zeta^5+2*zeta^6)",
                          "2*" + _E_PRINTED),
                  Variant("corrected",
                          "5*(2*eta^6-5*eta^5*zeta+12*eta^4*zeta^2-13*eta^3*zeta^3"
                          "+12*eta^2*zeta^4-5*eta*zeta^5+2*zeta^6)",
                          "2*" + _E,
                          "37*eta^4*zeta -> zeta^2 in the denominator (homogeneity)")),
            "b": (Variant("printed",
                          "2*eta^6-11*eta^5*zeta+11*eta^4*zeta^2-17*eta^3*zeta^3"
                          "-25*eta^2*zeta^4+25*eta*zeta^5-25*zeta^6",
                          "2*" + _E_PRINTED),
                  Variant("corrected",
                          "2*eta^6-11*eta^5*zeta+11*eta^4*zeta^2-17*eta^3*zeta^3"
                          "-25*eta^2*zeta^4+25*eta*zeta^5-25*zeta^6",
                          "2*" + _E,
                          "37*eta^4*zeta -> zeta^2 in the denominator (homogeneity)")),
            "c": (Variant("printed", "-5*zeta*(eta^2-eta*zeta+zeta^2)", _E_PRINTED),
                  Variant("corrected", "-5*zeta*(eta^2-eta*zeta+zeta^2)", _E,
                          "37*eta^4*zeta -> zeta^2 in the denominator (homogeneity)")),
            "d": (Variant("printed",
                          "-(8*eta^6-24*eta^5*zeta+49*eta^4*zeta^2-58*eta^3*zeta^3"
                          "+75*eta^2*zeta^4-50*eta*zeta^5+25*zeta^6)",
                          "2*" + _E_PRINTED),
                  Variant("corrected",
                          "-(8*eta^6-24*eta^5*zeta+49*eta^4*zeta^2-58*eta^3*zeta^3"
                          "+75*eta^2*zeta^4-50*eta*zeta^5+25*zeta^6)",
                          "2*" + _E,
                          "37*eta^4*zeta -> zeta^2 in the denominator (homogeneity)")),
        }},
        leading={"a": LeadingClaim("1/5"), "b": LeadingClaim("-4/5*eta", "zeta"),
                 "c": LeadingClaim("-1", "5*zeta^3"),
                 "d": LeadingClaim("-1/2*eta", "zeta")},
        leading_mode="diagonal",
        notes=("the displayed leading term 1/5 for symbol 'a' repeats the "
               "low-high value; on the balanced diagonal the solved symbol "
               "takes a different value (reported by the verifier)",),
    ),

    # ------------------------------------------------------------------
    SymbolSystem(
        id="src0_cubic_mixed",
        title="mixed cubic normal form for the first source family",
        variables=_ETA_ZETA,
        unknowns=("a", "b", "c", "d"),
        matrix=_MIXED_RBAR_MATRIX,
        rhs={"chi1": _rhs("-1/2*zeta", "1/2*eta", "0", "1/2*eta*zeta^3")},
        region="low_high",
        notes=("two displayed equations carry a shortened superscript on the "
               "unknowns and the last window is displayed with the other "
               "variable pair; stored uniformly in (eta, zeta)",),
        reference={"chi1": {
            "a": (Variant("printed",
                          "zeta*(-2*eta^7+11*eta^6*zeta-33*eta^5*zeta^2+58*eta^4*zeta^3"
                          "-71*eta^3*zeta^4+52*eta^2*zeta^5-25*eta*zeta^6+5*zeta^7)",
                          "2*eta*(zeta-eta)*(4*eta^6-12*eta^5*zeta+37*eta^4*zeta^2"
                          "-54*eta^3*eta^3+75*eta^2*zeta^4-50*eta*zeta^5+25*zeta^6)"),
                  Variant("corrected",
                          "zeta*(-2*eta^7+11*eta^6*zeta-33*eta^5*zeta^2+58*eta^4*zeta^3"
                          "-71*eta^3*zeta^4+52*eta^2*zeta^5-25*eta*zeta^6+5*zeta^7)",
                          "2*eta*(zeta-eta)*" + _E,
                          "54*eta^3*eta^3 -> 54*eta^3*zeta^3 (homogeneity)")),
            "b": (Variant("printed",
                          "eta*(eta^2-eta*zeta+zeta^2)*(2*eta^3*zeta-eta^2*zeta^2"
                          "+2*eta*zeta^3+5*zeta^4)",
                          "2*(zeta-eta)*(4*eta^6-12*eta^5*zeta+37*eta^4*zeta^2"
                          "-54*eta^3*eta^3+75*eta^2*zeta^4-50*eta*zeta^5+25*zeta^6)"),
                  Variant("corrected",
                          "eta*(eta^2-eta*zeta+zeta^2)*(2*eta^3*zeta-eta^2*zeta^2"
                          "+2*eta*zeta^3+5*zeta^4)",
                          "2*(zeta-eta)*" + _E,
                          "54*eta^3*eta^3 -> 54*eta^3*zeta^3 (homogeneity)")),
            "c": (Variant("printed",
                          "-2*eta^5+3*eta^4*zeta-7*eta^3*zeta^2-2*eta^2*zeta^3"
                          "+5*eta*zeta^4+5*zeta^5",
                          "2*eta*(zeta-eta)*(4*eta^6-12*eta^5*zeta+37*eta^4*zeta^2"
                          "-54*eta^3*eta^3+75*eta^2*zeta^4-50*eta*zeta^5+25*zeta^6)"),
                  Variant("corrected",
                          "-2*eta^5+3*eta^4*zeta-7*eta^3*zeta^2-2*eta^2*zeta^3"
                          "+5*eta*zeta^4-5*zeta^5",
                          "2*eta*(zeta-eta)*" + _E,
                          "54*eta^3*eta^3 -> 54*eta^3*zeta^3 (homogeneity); "
                          "+5*zeta^5 -> -5*zeta^5 (forced by the displayed system)")),
            "d": (Variant("printed",
                          "-2*eta^7+11*eta^6*zeta-33*eta^5*zeta^2+63*eta^4*zeta^3"
                          "-76*eta^3*zeta^4+52*eta^2*zeta^5-20*eta*zeta^6",
                          "2*(zeta-eta)*(4*eta^6-12*eta^5*zeta+37*eta^4*zeta^2"
                          "-54*eta^3*eta^3+75*eta^2*zeta^4-50*eta*zeta^5+25*zeta^6)"),
                  Variant("corrected",
                          "-2*eta^7+11*eta^6*zeta-33*eta^5*zeta^2+63*eta^4*zeta^3"
                          "-76*eta^3*zeta^4+52*eta^2*zeta^5-20*eta*zeta^6",
                          "2*(zeta-eta)*" + _E,
                          "54*eta^3*eta^3 -> 54*eta^3*zeta^3 (homogeneity)")),
        }},
        leading_mode="low",
    ),

    # ------------------------------------------------------------------
    SymbolSystem(
        id="src0_cubic_holo",
        title="holomorphic cubic normal form for the first source family",
        variables=_XI_ETA,
        unknowns=("a", "b", "c", "d"),
        matrix=_HOLO_R_MATRIX,
        rhs={"chi1": _rhs("-1/2*eta", "1/2*xi", "0", "5/2*xi*eta^3")},
        region="low_high",
        reference={"chi1": {
            "a": (Variant("printed",
                          "-5*xi^7-30*xi^6*eta-107*xi^5*eta^2-183*xi^4*eta^3"
                          "-187*xi^3*eta^4-133*xi^2*eta^5-42*xi*eta^6-5*eta^7",
                          "2*xi*" + _D),
                  Variant("corrected",
                          "-5*xi^7-30*xi^6*eta-107*xi^5*eta^2-183*xi^4*eta^3"
                          "-187*xi^3*eta^4-113*xi^2*eta^5-42*xi*eta^6-5*eta^7",
                          "2*xi*" + _D,
                          "displayed coefficient 133 does not solve the displayed "
                          "system; the exact solve gives 113")),
            "b": (Variant("printed",
                          "-5*xi^6-10*xi^5*eta-37*xi^4*eta^2-85*xi^3*eta^3"
                          "-112*xi^2*eta^4-85*xi*eta^5-30*eta^6",
                          "2*" + _D),),
            "c": (Variant("printed",
                          "5*xi^5+12*xi^4*eta+15*xi^3*eta^2+25*xi^2*eta^3"
                          "+22*xi*eta^4+5*eta^5",
                          "2*xi*eta*" + _D),),
            "d": (Variant("printed",
                          "-(5*xi^7+32*xi^6*eta+88*xi^5*eta^2+147*xi^4*eta^3"
                          "+158*xi^3*eta^4+132*xi^2*eta^5+80*xi*eta^6+30*eta^7)",
                          "2*eta*" + _D),),
        }},
        leading_mode="low",
    ),

    # ------------------------------------------------------------------
    SymbolSystem(
        id="src1_lowhigh",
        title="low-high normal form for the second source family",
        variables=_XI_ETA,
        unknowns=("a", "b", "c", "d"),
        matrix=_HOLO_R_MATRIX,
        rhs={"chi1": _rhs(
            "0", "(xi+eta)", "xi",
            "-(eta^4+5/2*xi*eta^3+5*xi^2*eta^2+5*xi^3*eta+xi^4)",
        )},
        region="low_high",
        reference={"chi1": {
            "a": (Variant("printed",
                          "10*xi^7+70*xi^6*eta+170*xi^5*eta^2+227*xi^4*eta^3"
                          "+184*xi^3*eta^4+80*xi^2*eta^5+5*xi*eta^6+10*eta^7",
                          "2*eta*" + _D),
                  Variant("corrected",
                          "10*xi^7+70*xi^6*eta+170*xi^5*eta^2+227*xi^4*eta^3"
                          "+184*xi^3*eta^4+80*xi^2*eta^5+5*xi*eta^6-10*eta^7",
                          "2*eta*" + _D,
                          "+10*eta^7 -> -10*eta^7; the sign is forced by the first "
                          "displayed equation together with the displayed b and c")),
            "b": (Variant("printed",
                          "10*xi^7+80*xi^6*eta+240*xi^5*eta^2+397*xi^4*eta^3"
                          "+427*xi^3*eta^4+300*xi^2*eta^5+125*xi*eta^6+25*eta^7",
                          "2*eta*" + _D),),
            "c": (Variant("printed",
                          "8*xi^4+18*xi^3*eta+20*xi^2*eta^2+15*xi*eta^3+5*eta^4",
                          "eta*" + _D),),
            "d": (Variant("printed",
                          "-(8*xi^3+10*xi^2*eta+10*xi*eta^2+5*eta^3)"
                          "*(2*xi^4+5*xi^3*eta+10*xi^2*eta^2+10*xi*eta^3+5*eta^4)",
                          "2*eta*" + _D),),
        }},
        leading={"a": LeadingClaim("1/5"), "b": LeadingClaim("1/2"),
                 "c": LeadingClaim("1", "5*eta^3"), "d": LeadingClaim("-1/2")},
        leading_mode="low",
    ),

    # ------------------------------------------------------------------
    SymbolSystem(
        id="src1_balanced_holo",
        title="balanced holomorphic normal form for the second source family",
        variables=_XI_ETA,
        unknowns=("a", "b", "c", "d"),
        matrix=_HOLO_SWAPPED_MATRIX,
        rhs={"chi2": _rhs(
            "0", "(xi+eta)", "eta",
            "-(5/2*eta^4+5*eta^3*xi+5*eta^2*xi^2+5/2*eta*xi^3+xi^4)",
        )},
        region="balanced",
        reference={"chi2": {
            "a": (Variant("printed",
                          "25*eta^7+100*eta^6*xi+200*eta^5*xi^2+242*eta^4*xi^3"
                          "+190*eta^3*xi^4+80*eta^2*xi^5+5*xi^6+10*xi^7",
                          "2*xi*" + _D),
                  Variant("corrected",
                          "25*eta^7+100*eta^6*xi+200*eta^5*xi^2+242*eta^4*xi^3"
                          "+190*eta^3*xi^4+80*eta^2*xi^5+5*eta*xi^6-10*xi^7",
                          "2*xi*" + _D,
                          "5*xi^6 -> 5*eta*xi^6 (homogeneity) and "
                          "+10*xi^7 -> -10*xi^7 (forced by the displayed system)")),
            "b": (Variant("printed",
                          "25*eta^7+125*eta^6*xi+300*eta^5*xi^2+442*eta^4*xi^3"
                          "+442*eta^3*xi^4+300*eta^2*xi^5+125*eta*xi^6+25*xi^7",
                          "2*xi*" + _D),),
            "c": (Variant("printed",
                          "5*(eta^4+3*eta^3*xi+4*eta^2*xi^2+3*xi^3*eta+xi^4)",
                          "xi*" + _D),),
            "d": (Variant("printed",
                          "-5*(eta^3+2*eta^2*xi+2*eta*xi^2+xi^3)"
                          "*(2*eta^4+5*eta^3*xi+10*eta^2*xi^2+10*eta*xi^3+5*xi^4)",
                          "2*xi*" + _D),),
        }},
        leading={"a": LeadingClaim("213/448"), "b": LeadingClaim("223/224"),
                 "c": LeadingClaim("15", "224*eta^3"), "d": LeadingClaim("-15/28")},
        leading_mode="diagonal",
    ),

    # ------------------------------------------------------------------
    SymbolSystem(
        id="src1_balanced_mixed",
        title="balanced mixed normal form for the second source family",
        variables=_ETA_ZETA,
        unknowns=("a", "b", "c", "d"),
        matrix=_MIXED_SWAPPED_MATRIX,
        rhs={"chi2": _rhs(
            "zeta", "-zeta", "-zeta",
            "-3/2*zeta^4+zeta^3*eta+eta^2*zeta^2-3/2*zeta*eta^3",
        )},
        region="balanced",
        indicator="zeta<eta",
        reference={"chi2": {
            "a": (Variant("printed",
                          "-(8*eta^6*zeta-24*eta^5*zeta^2+49*eta^4*zeta^3"
                          "-58*eta^3*zeta^4+75*eta^2*zeta^5-50*eta*zeta^6+25*zeta^7)",
                          "2*eta*" + _E_PRINTED),
                  Variant("corrected",
                          "-(8*eta^6*zeta-24*eta^5*zeta^2+49*eta^4*zeta^3"
                          "-58*eta^3*zeta^4+75*eta^2*zeta^5-50*eta*zeta^6+25*zeta^7)",
                          "2*eta*" + _E,
                          "37*eta^4*zeta -> zeta^2 in the denominator (homogeneity)")),
            "b": (Variant("printed",
                          "-(-2*eta^6*zeta+11*eta^5*zeta^2-11*eta^4*zeta^3"
                          "+17*eta^3*zeta^4+25*eta^2*zeta^5-25*eta*zeta^6+25*zeta^7)",
                          "2*eta*" + _E_PRINTED),
                  Variant("corrected",
                          "-(-2*eta^6*zeta+11*eta^5*zeta^2-11*eta^4*zeta^3"
                          "+17*eta^3*zeta^4+25*eta^2*zeta^5-25*eta*zeta^6+25*zeta^7)",
                          "2*eta*" + _E,
                          "37*eta^4*zeta -> zeta^2 in the denominator (homogeneity)")),
            "c": (Variant("printed",
                          "-5*(eta^2*zeta^2-eta*zeta^3+zeta^4)",
                          "eta*" + _E_PRINTED),
                  Variant("corrected",
                          "-5*(eta^2*zeta^2-eta*zeta^3+zeta^4)",
                          "eta*" + _E,
                          "37*eta^4*zeta -> zeta^2 in the denominator (homogeneity)")),
            "d": (Variant("printed",
                          "5*(eta^2*zeta-eta*zeta^2+zeta^3)"
                          "*(2*eta^4-3*eta^3*zeta+7*zeta^2*zeta^2-3*eta*zeta^3+2*zeta^4)",
                          "2*eta*" + _E_PRINTED),
                  Variant("corrected",
                          "5*(eta^2*zeta-eta*zeta^2+zeta^3)"
                          "*(2*eta^4-3*eta^3*zeta+7*eta^2*zeta^2-3*eta*zeta^3+2*zeta^4)",
                          "2*eta*" + _E,
                          "7*zeta^2*zeta^2 -> 7*eta^2*zeta^2; denominator 37-term fixed")),
        }},
        leading={"a": LeadingClaim("-1/2"), "b": LeadingClaim("-4/5"),
                 "c": LeadingClaim("-1", "5*eta^3"), "d": LeadingClaim("1/2")},
        leading_mode="diagonal",
    ),

    # ------------------------------------------------------------------
    SymbolSystem(
        id="src1_cubic_holo",
        title="holomorphic cubic normal form for the second source family",
        variables=_XI_ETA,
        unknowns=("a", "b", "c", "d"),
        matrix=_HOLO_R_MATRIX,
        rhs={"chi1": _rhs("1/2*eta", "-1/2*xi", "-1/2*eta", "-25/4*xi*eta^3")},
        region="low_high",
        reference={"chi1": {
            "a": (Variant("printed",
                          "10*xi^7+60*xi^6*eta+289*xi^5*eta^2+520*xi^4*eta^3"
                          "+534*xi^3*eta^4+321*xi^2*eta^5+134*xi*eta^6+20*eta^7",
                          "4*xi*" + _D),),
            "b": (Variant("printed",
                          "10*xi^6+20*xi^5*eta+149*xi^4*eta^2+399*xi^3*eta^3"
                          "+528*xi^2*eta^4+395*xi*eta^5+135*eta^6",
                          "4*" + _D),),
            "c": (Variant("printed",
                          "-(5*xi^5+17*xi^4*eta+30*xi^3*eta^2+60*xi^2*eta^3"
                          "+52*xi*eta^4+10*eta^5)",
                          "2*xi*eta*" + _D),),
            "d": (Variant("printed",
                          "10*xi^7+74*xi^6*eta+196*xi^5*eta^2+344*xi^4*eta^3"
                          "+401*xi^3*eta^4+418*xi^2*eta^5+310*xi*eta^6+135*eta^7",
                          "4*eta*" + _D),),
        }},
        leading_mode="low",
    ),

    # ------------------------------------------------------------------
    SymbolSystem(
        id="src1_cubic_mixed",
        title="mixed cubic normal form for the second source family",
        variables=_ETA_ZETA,
        unknowns=("a", "b", "c", "d"),
        matrix=_MIXED_RBAR_MATRIX,
        rhs={"chi1": _rhs("1/2*zeta", "-1/2*eta", "-1/2*zeta", "-3*eta*zeta^3")},
        region="low_high",
        reference={"chi1": {
            "a": (Variant("printed",
                          "-2*eta^7*zeta+11*eta^6*zeta^2-43*eta^5*zeta^3"
                          "+73*eta^4*zeta^4-106*eta^3*zeta^5+72*eta^2*zeta^6"
                          "-40*eta*zeta^7+10*zeta^8",
                          "eta*(eta-zeta)*" + _E2X),),
            "b": (Variant("printed",
                          "2*eta^5*zeta-eta^4*zeta^2-6*eta^3*zeta^3"
                          "+21*eta^2*zeta^4-30*eta*zeta^5+25*zeta^6",
                          _E2X),),
            "c": (Variant("printed",
                          "-2*eta^4-eta^3*zeta-3*eta^2*zeta^2-15*eta*zeta^3+10*zeta^4",
                          "eta*" + _E2X),),
            "d": (Variant("printed",
                          "-(2*eta^7-13*eta^6*zeta+36*eta^5*zeta^2-70*eta^4*zeta^3"
                          "+79*eta^3*zeta^4-29*eta^2*zeta^5-5*eta*zeta^6+25*zeta^7)",
                          "(eta-zeta)*" + _E2X),),
        }},
        leading_mode="low",
    ),

    # ------------------------------------------------------------------
    SymbolSystem(
        id="nf_symmetrized",
        title="symmetrized balanced normal form of the full evolution",
        variables=_XI_ETA,
        unknowns=("a", "b", "c"),
        matrix=(
            ("(xi+eta)", "-2*eta", "2*xi^4"),
            ("xi", "0", "(xi+eta)^4"),      # first coefficient acts under sym()
            ("eta^4", "-(xi+eta)^4", "0"),  # first coefficient acts under sym()
        ),
        rhs={"chi2": _rhs(
            "(xi+eta)",
            "-1/2*(xi+eta)",
            "7/4*xi^4+15/4*xi^3*eta+5*xi^2*eta^2+15/4*xi*eta^3+7/4*eta^4",
        )},
        region="balanced",
        symmetrized=True,
        notes=("rows 2 and 3 read sym(xi*a) and sym(eta^4*a); b and c are "
               "symmetric under exchanging the variables; solved by "
               "eliminating a through the first equation",
               "the displayed right side of the third equation is the "
               "symmetrization of 7/2*xi^4+15/2*xi^3*eta+5*xi^2*eta^2"),
        reference={"chi2": {
            "b": (Variant("printed",
                          "-(xi+eta)^2*(25*eta^6+100*eta^5*xi+200*eta^4*xi^2"
                          "+242*eta^3*xi^3+200*eta^2*xi^4+100*eta^2*xi^5+25*xi^6)",
                          "4*xi*eta*" + _D),
                  Variant("corrected",
                          "-(xi+eta)^2*(25*eta^6+100*eta^5*xi+200*eta^4*xi^2"
                          "+242*eta^3*xi^3+200*eta^2*xi^4+100*eta*xi^5+25*xi^6)",
                          "4*xi*eta*" + _D,
                          "100*eta^2*xi^5 -> 100*eta*xi^5 (homogeneity)")),
            "c": (Variant("printed",
                          "-5*(xi+eta)^3*(xi^2+xi*eta+eta^2)",
                          "2*xi*eta*" + _D),),
        }},
        leading_mode="diagonal",
    ),

    # ------------------------------------------------------------------
    SymbolSystem(
        id="nf_mixed",
        title="mixed balanced normal form of the full evolution",
        variables=_ETA_ZETA,
        unknowns=("a", "b", "c", "d"),
        matrix=_MIXED_SWAPPED_MATRIX,
        rhs={"chi2": _rhs(
            "(zeta-eta)", "(zeta-eta)", "(zeta-eta)",
            "3/2*zeta^4-5/2*zeta^3*eta+5/2*zeta*eta^3-3/2*eta^4",
        )},
        region="balanced",
        indicator="zeta<eta",
        reference={"chi2": {
            "a": (Variant("printed",
                          "zeta*(-12*eta^6+51*eta^5*zeta-121*eta^4*zeta^2"
                          "+147*eta^3*zeta^3-95*eta^2*zeta^4+25*eta*zeta^5+5*zeta^6)",
                          "2*eta*" + _E_PRINTED),
                  Variant("corrected",
                          "zeta*(-12*eta^6+51*eta^5*zeta-121*eta^4*zeta^2"
                          "+147*eta^3*zeta^3-95*eta^2*zeta^4+25*eta*zeta^5+5*zeta^6)",
                          "2*eta*" + _E,
                          "37-term of the denominator (homogeneity)")),
            "b": (Variant("printed",
                          "2*eta^7-13*eta^6*zeta+22*eta^5*zeta^2-28*eta^4*zeta^3"
                          "-8*eta^3*zeta^4+30*eta^2*zeta^5-30*eta*zeta^6+5*zeta^7",
                          "2*eta*" + _E_PRINTED),
                  Variant("corrected",
                          "2*eta^7-13*eta^6*zeta+22*eta^5*zeta^2-28*eta^4*zeta^3"
                          "-8*eta^3*zeta^4+30*eta^2*zeta^5-30*eta*zeta^6+5*zeta^7",
                          "2*eta*" + _E,
                          "37-term of the denominator (homogeneity)")),
            "c": (Variant("printed",
                          "4*eta^4-11*eta^2*zeta+24*eta^2*zeta^2-16*eta*zeta^3+9*zeta^4",
                          _E_PRINTED),
                  Variant("corrected",
                          "4*eta^4-11*eta^3*zeta+24*eta^2*zeta^2-16*eta*zeta^3+9*zeta^4",
                          "eta*" + _E,
                          "11*eta^2*zeta -> 11*eta^3*zeta (homogeneity); the "
                          "denominator needs one factor of eta; 37-term fixed")),
            "d": (Variant("printed",
                          "-(10*eta^7-35*eta^6*zeta+85*eta^5*zeta^2-125*eta^4*zeta^3"
                          "+133*eta^3*zeta^4-109*eta^2*zeta^5+59*eta*zeta^6-18*zeta^7)",
                          "2*" + _E_PRINTED),
                  Variant("corrected",
                          "10*eta^7-35*eta^6*zeta+85*eta^5*zeta^2-125*eta^4*zeta^3"
                          "+133*eta^3*zeta^4-109*eta^2*zeta^5+59*eta*zeta^6-18*zeta^7",
                          "2*eta*" + _E,
                          "denominator needs one factor of eta and the displayed "
                          "overall sign is flipped; 37-term fixed")),
        }},
        leading_mode="diagonal",
    ),

    # ------------------------------------------------------------------
    SymbolSystem(
        id="conj_holo",
        title="Sobolev-conjugated holomorphic commutator system",
        variables=_XI_ETA,
        unknowns=("a", "b", "c", "d"),
        matrix=_HOLO_SWAPPED_MATRIX,
        rhs={
            "chi3": _rhs(
                "0",
                ("xi*eta+xi^2", "eta"),
                "xi",
                ("-(5/2*xi*eta^4+5*xi^2*eta^3+5*xi^3*eta^2+5/2*xi^4*eta+xi^5)", "eta"),
            ),
            "s_chi1": _rhs(
                "1/2*xi", "1/2*xi", "1/2*xi",
                "-(2*xi*eta^3+3*xi^2*eta^2+2*xi^3*eta+1/2*xi^4)",
            ),
        },
        region="low_high",
        notes=("solved per right-hand channel; the full symbol is "
               "(chi3 part) + s * (chi1 part) with s the Sobolev index",),
        reference={
            "chi3": {
                "a": (Variant("printed",
                              "-10*xi^7+5*xi^6*eta+80*xi^5*eta^2+190*xi^4*eta^3"
                              "+242*xi^3*eta^4+200*xi^2*eta^5+100*xi*eta^6+25*eta^7",
                              "2*eta*" + _D),),
                "b": (Variant("printed",
                              "25*xi^7+125*xi^6*eta+300*xi^5*eta^2+442*xi^4*eta^3"
                              "+442*xi^3*eta^4+300*xi^2*eta^5+125*xi*eta^6+25*eta^7",
                              "2*eta*" + _D),),
                "c": (Variant("printed",
                              "5*(xi^4+3*xi^3*eta+4*xi^2*eta^2+3*xi*eta^3+eta^4)",
                              "eta*" + _D),),
                "d": (Variant("printed",
                              "-5*(5*xi^7+20*xi^6*eta+40*xi^5*eta^2+50*xi^4*eta^3"
                              "+42*xi^3*eta^4+24*xi^2*eta^5+9*xi*eta^6+2*eta^7)",
                              "2*eta*" + _D),),
            },
            "s_chi1": {
                "a": (Variant("printed",
                              "-2*xi^7+45*xi^6*eta+190*xi^5*eta^2+390*xi^4*eta^3"
                              "+487*xi^3*eta^4+400*xi^2*eta^5+200*xi*eta^6+50*eta^7",
                              "4*eta*" + _D),
                      Variant("corrected", "1/2", "1",
                              "the displayed s-part does not solve the displayed "
                              "system; the exact solution is the constant 1/2, "
                              "matching the twin mixed system's display")),
                "b": (Variant("printed",
                              "-5*xi^7+35*xi^6*eta+180*xi^5*eta^2+385*xi^4*eta^3"
                              "+487*xi^3*eta^4+400*xi^2*eta^5+200*xi*eta^6+50*eta^7",
                              "4*eta*" + _D),
                      Variant("corrected", "1/2", "1",
                              "the displayed s-part does not solve the displayed "
                              "system; the exact solution is the constant 1/2, "
                              "matching the twin mixed system's display")),
                "c": (Variant("printed", "xi^3*(xi+eta)", "eta*" + _D),
                      Variant("corrected", "0", "1",
                              "the displayed s-part does not solve the displayed "
                              "system; the exact solution vanishes, matching the "
                              "twin mixed system's display")),
                "d": (Variant("printed",
                              "-(5*xi^7+10*xi^6*eta+10*xi^5*eta^2+5*xi^4*eta^3"
                              "+2*xi^3*eta^4)",
                              "4*eta*" + _D),
                      Variant("corrected", "0", "1",
                              "the displayed s-part does not solve the displayed "
                              "system; the exact solution vanishes, matching the "
                              "twin mixed system's display")),
            },
        },
        leading_mode="low",
    ),

    # ------------------------------------------------------------------
    SymbolSystem(
        id="conj_mixed",
        title="Sobolev-conjugated mixed commutator system",
        variables=_ETA_ZETA,
        unknowns=("a", "b", "c", "d"),
        matrix=_MIXED_SWAPPED_MATRIX,
        rhs={
            "chi3": _rhs(
                "-eta", "eta", "eta",
                "3/2*eta*zeta^3-eta^2*zeta^2-eta^3*zeta+3/2*eta^4",
            ),
            "s_chi1": _rhs(
                "-1/2*eta", "1/2*eta", "1/2*eta",
                "2*eta*zeta^3-3*eta^2*zeta^2+2*eta^3*zeta-1/2*eta^4",
            ),
        },
        region="low_high",
        notes=("solved per right-hand channel; the full symbol is "
               "(chi3 part) + s * (chi1 part) with s the Sobolev index",),
        reference={
            "chi3": {
                "a": (Variant("printed",
                              "8*eta^6-24*eta^5*zeta+49*eta^4*zeta^2-58*eta^3*zeta^3"
                              "+75*eta^2*zeta^4-50*eta*zeta^5+25*zeta^6",
                              _E2X),),
                "b": (Variant("printed",
                              "-2*eta^6+11*eta^5*zeta-11*eta^4*zeta^2+17*eta^3*zeta^3"
                              "+25*eta^2*zeta^4-25*eta*zeta^5+25*zeta^6",
                              _E2X),),
                "c": (Variant("printed",
                              "10*(eta^2*zeta-eta*zeta^2+zeta^3)",
                              _E2X),),
                "d": (Variant("printed",
                              "-5*(2*eta^6-5*eta^5*zeta+12*eta^4*zeta^2"
                              "-13*eta^3*zeta^3+12*eta^2*zeta^4-5*eta*zeta^5+2*zeta^6)",
                              _E2X),),
            },
            "s_chi1": {
                "a": (Variant("printed", "1/2", "1"),),
                "b": (Variant("printed", "1/2", "1"),),
                "c": (Variant("printed", "0", "1"),),
                "d": (Variant("printed", "0", "1"),),
            },
        },
        leading_mode="low",
    ),
)


def catalog() -> tuple[SymbolSystem, ...]:
    """All symbol systems, in presentation order."""
    return CATALOG


def get_system(system_id: str) -> SymbolSystem:
    for sys in CATALOG:
        if sys.id == system_id:
            return sys
    raise KeyError(f"unknown symbol system {system_id!r}")
