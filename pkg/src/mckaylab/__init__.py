"""Desk-scale verification laboratory for local-global character counts.

The package certifies, by exact computation, that the combinatorial
parametrization of irreducible characters of GL_n(q) and GU_n(q) matches
brute-force character tables, and that the parameter-level correspondence
with torus-normalizer characters has all the properties the counting
arguments need: bijectivity, compatibility with central characters and
with tensoring by linear characters, degree congruences, and equality of
prime-to-ell counts.
"""

from .exactfield import spp, SignedPrimePower
from .bijection import (
    Cell,
    check_cell,
    default_grid,
    omega_tilde,
    run_grid,
    verify_vs_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "Cell",
    "SignedPrimePower",
    "check_cell",
    "default_grid",
    "omega_tilde",
    "run_grid",
    "spp",
    "verify_vs_oracle",
    "__version__",
]
