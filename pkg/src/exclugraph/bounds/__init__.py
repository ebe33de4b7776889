from .independence import IndependentSet, independence_number
from .cliques import CliqueList, maximal_cliques
from .packing import FractionalPacking, fractional_packing, packing_lp
from .report import BoundsReport, bounds_report

__all__ = [
    "IndependentSet",
    "independence_number",
    "CliqueList",
    "maximal_cliques",
    "FractionalPacking",
    "fractional_packing",
    "packing_lp",
    "BoundsReport",
    "bounds_report",
]
