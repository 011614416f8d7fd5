"""Exact symbolic engine for N-graded polynomial algebras and derived
L-infinity brackets on shifted cotangent charts.

Thin facade over the compiled ``koszul._core`` extension.
"""

from ._core import (
    Chart,
    Extended,
    Linfty,
    MasterEquationError,
    ParseError,
    Poly,
    bracket,
    constant,
    coordinate,
    decalage_sign,
    partial,
    poly,
    run_scenario_file,
    run_scenario_text,
    schouten,
    version,
    zero_section,
)

__all__ = [
    "Chart",
    "Extended",
    "Linfty",
    "MasterEquationError",
    "ParseError",
    "Poly",
    "bracket",
    "constant",
    "coordinate",
    "decalage_sign",
    "partial",
    "poly",
    "run_scenario_file",
    "run_scenario_text",
    "schouten",
    "version",
    "zero_section",
]

__version__ = version()
