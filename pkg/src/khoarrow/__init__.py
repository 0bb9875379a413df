"""Khovanov homology via the arrow algebra.

Unified even/odd unreduced Khovanov complexes over the specialization
ring (X, Y, Z) in {+-1}^3, and a basepoint-free reduced complex built
from the lattice of arrow operators, with exact integer homology.
"""

from .algebra import EVEN, ODD, RingParams
from .chain import BigradedComplex, build_unreduced
from .diagram import Diagram, MoveSpec, apply_move, mirror, parse_gauss, parse_pd
from .homology import HomologyTable, NotAComplex, homology
from .jones import LaurentPoly, euler_characteristic, jones
from .reduced import OperatorLattice, build_reduced, operator_lattice
from .snf import smith_normal_form

__version__ = "0.1.0"

__all__ = [
    "EVEN",
    "ODD",
    "RingParams",
    "BigradedComplex",
    "build_unreduced",
    "Diagram",
    "MoveSpec",
    "apply_move",
    "mirror",
    "parse_gauss",
    "parse_pd",
    "HomologyTable",
    "NotAComplex",
    "homology",
    "LaurentPoly",
    "euler_characteristic",
    "jones",
    "OperatorLattice",
    "build_reduced",
    "operator_lattice",
    "smith_normal_form",
    "__version__",
]
