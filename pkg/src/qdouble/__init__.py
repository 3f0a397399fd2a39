"""Exact symbolic computation for SL_q(N), its coquasitriangular dual and the induced braided Hopf algebra."""

from .scalar import QZContext, RatFunc
from .qmatrix import QElement
from .functionals import DualElement
from .double import DoubleElement, QQElement
from .suites import SUITES, SuiteReport, run_suite

__all__ = [
    "QZContext",
    "RatFunc",
    "QElement",
    "DualElement",
    "DoubleElement",
    "QQElement",
    "SUITES",
    "SuiteReport",
    "run_suite",
]
__version__ = "0.1.0"
