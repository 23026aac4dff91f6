"""Grover search in the geometric algebra of three-space.

Modules:

* :mod:`~ga_grover.cl3` - Cl(3,0) multivectors, rotors and vectors
* :mod:`~ga_grover.su2` - su(2) generators, weight basis, spinor maps
* :mod:`~ga_grover.search` - Grover rotors, iteration counts, trajectories
* :mod:`~ga_grover.statevector` - independent N-dimensional reference
* :mod:`~ga_grover.cli` - the ``ga-grover`` command

The product and iteration loops run in a compiled extension when it is
available; :data:`BACKEND` names the one in use.
"""

from ._backend import BACKEND
from .cl3 import Multivector, Rotor, Vector3
from .errors import (
    DegenerateSearchError,
    GroverError,
    InfeasiblePhaseError,
    InvalidInputError,
    TrajectoryCheckError,
)
from .search import SearchSpec, run_trajectory

__all__ = [
    "BACKEND",
    "DegenerateSearchError",
    "GroverError",
    "InfeasiblePhaseError",
    "InvalidInputError",
    "Multivector",
    "Rotor",
    "SearchSpec",
    "TrajectoryCheckError",
    "Vector3",
    "run_trajectory",
]
