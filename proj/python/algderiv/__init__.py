"""Exact spectral toolkit for derivations on polynomial rings."""

from algderiv._core import (
    AlgderivError,
    Caps,
    Derivation,
    Eigenvalue,
    MatrixGroup,
    Part,
    Poly,
    Ring,
    act,
    algebraic_dimension,
    apply,
    apply_power,
    check_euler_descends,
    decompose,
    enumerate_group,
    format_poly,
    is_locally_nilpotent,
    mu_height,
    nilpotence,
    parse_poly,
    phi,
    random_poly,
    reynolds,
    run_suite,
    spectrum,
    suite_names,
)

__all__ = [
    "AlgderivError",
    "Caps",
    "Derivation",
    "Eigenvalue",
    "MatrixGroup",
    "Part",
    "Poly",
    "Ring",
    "act",
    "algebraic_dimension",
    "apply",
    "apply_power",
    "check_euler_descends",
    "decompose",
    "enumerate_group",
    "format_poly",
    "is_locally_nilpotent",
    "mu_height",
    "nilpotence",
    "parse_poly",
    "phi",
    "random_poly",
    "reynolds",
    "run_suite",
    "spectrum",
    "suite_names",
]
