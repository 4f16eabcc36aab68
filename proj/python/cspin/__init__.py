"""ISpin(4,C) structure theory: Clifford algebra, orbits, standard boosts and Wigner cocycles.

Matrices are complex numpy arrays; a spin element is a pair ``(A, B)`` of 2x2
matrices with unit determinant acting by ``M -> A M B^-1``.
"""

from ._cspin import (
    CspinError,
    act,
    boost,
    classify,
    covering,
    eta,
    gamma,
    j_plus,
    minkowski_embed,
    radon_nikodym,
    random_spin,
    run_cli,
    sample_chart,
    sigma_map,
    sigma_unmap,
    suite_names,
    transporter,
    verify,
    volume_form,
    wigner_cocycle,
)

METHODS = ("beta1", "beta2", "beta3", "beta3p", "wigner")

__all__ = [
    "CspinError",
    "METHODS",
    "act",
    "boost",
    "classify",
    "covering",
    "eta",
    "gamma",
    "j_plus",
    "minkowski_embed",
    "radon_nikodym",
    "random_spin",
    "run_cli",
    "sample_chart",
    "sigma_map",
    "sigma_unmap",
    "suite_names",
    "transporter",
    "verify",
    "volume_form",
    "wigner_cocycle",
]
