"""Analysis of (mu, nu)-asynchronous linear discrete dynamical systems.

Two coupled linear difference equations, x on T_mu and y on T_nu, read each
other's state through sample and hold. This package builds their exact 4-D
linear representation, simulates them directly, classifies stability of the
one-period solution operator, interpolates on a finer scale with a complex
matrix root and checks dynamical equivalence.
"""

from .numeric import Rat, rat_from_string, rat_to_string
from .stepmat import SystemSpec, table_matrix
from .evolution import evolution, solution_operator, psi_mu1_closed, psi_sync_closed
from .simulate import simulate
from .spectral import classify_stability, eigen_2x2
from .interp import build_interp, mat2_root
from .equivalence import backsolve_mu1, check_equivalence

__all__ = [
    "Rat",
    "SystemSpec",
    "backsolve_mu1",
    "build_interp",
    "check_equivalence",
    "classify_stability",
    "eigen_2x2",
    "evolution",
    "mat2_root",
    "psi_mu1_closed",
    "psi_sync_closed",
    "rat_from_string",
    "rat_to_string",
    "simulate",
    "solution_operator",
    "table_matrix",
]
