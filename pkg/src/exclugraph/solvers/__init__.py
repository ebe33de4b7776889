from .eigen import SymmetricMatrix, Spectrum, symmetric_eigen
from .theta_sdp import ThetaSolution, check_weights, solve_theta_sdp
from .simplex import LpSolution, solve_lp

__all__ = [
    "SymmetricMatrix",
    "Spectrum",
    "symmetric_eigen",
    "ThetaSolution",
    "check_weights",
    "solve_theta_sdp",
    "LpSolution",
    "solve_lp",
]
