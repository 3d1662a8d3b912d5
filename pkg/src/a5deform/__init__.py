"""Exact computations for the Lie algebra sl(6)/Z over fields of characteristic 2.

Modules: ``field_linalg`` (GF(2^e) and linear algebra), ``rootsys``,
``chevalley``, ``cochain``, ``cohomology``, ``trivector``, ``deform``,
``simplicity``, plus JSON I/O and the command line in ``cli``.
"""
from . import rootsys, trivector
from .chevalley import LieAlgebra, build_L, build_sl6, center
from .cochain import Cochain, cbracket, cup, differential
from .cohomology import basis_cocycle, classes_equal, h2_summary, is_coboundary
from .deform import (DeformedBracket, build_type_ii, build_type_iii, jacobi_coefficients, obstruction_status,
                     psi1, psi2, specialize)
from .field_linalg import Matrix, field
from .simplicity import is_simple

__version__ = "0.1.0"

__all__ = [
    "Cochain", "DeformedBracket", "LieAlgebra", "Matrix", "basis_cocycle", "build_L", "build_sl6",
    "build_type_ii", "build_type_iii", "cbracket", "center", "classes_equal", "cup", "differential",
    "field", "h2_summary", "is_coboundary", "is_simple", "jacobi_coefficients", "obstruction_status",
    "psi1", "psi2", "rootsys", "specialize", "trivector",
]
