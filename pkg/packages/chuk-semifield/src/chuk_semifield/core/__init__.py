"""Presemifields as structure constants: spread sets, Knuth orbit, nuclei, autotopisms."""

from chuk_semifield.core.autotopism import gamma_triple, verify_gamma_autotopism
from chuk_semifield.core.knuth import OrbitMember, kaplansky, knuth_orbit
from chuk_semifield.core.nuclei import (
    NucleiTriple,
    middle_nucleus_from_spread,
    nuclei,
    nuclei_agree_with_spread,
    right_nucleus_from_spread,
)
from chuk_semifield.core.presemifield import AxiomReport, IsotopismTriple, PreSemifield
from chuk_semifield.core.spread import SpreadSet, spread_equal, spread_set, transpose

__all__ = [
    # Presemifields
    "PreSemifield",
    "IsotopismTriple",
    "AxiomReport",
    # Spread sets
    "SpreadSet",
    "spread_set",
    "spread_equal",
    "transpose",
    # Knuth orbit
    "kaplansky",
    "knuth_orbit",
    "OrbitMember",
    # Nuclei
    "NucleiTriple",
    "nuclei",
    "right_nucleus_from_spread",
    "middle_nucleus_from_spread",
    "nuclei_agree_with_spread",
    # Autotopisms
    "gamma_triple",
    "verify_gamma_autotopism",
]
