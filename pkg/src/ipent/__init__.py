"""Separability, standard forms and entanglement of two identical particles."""

from . import boson, correlation, fermion, matfact, measurement, oracle, states
from .boson import BosonKind
from .errors import IpentError
from .fermion import FermionKind
from .states import TwoBosonState, TwoFermionState, SingleParticleState

__all__ = [
    "boson", "correlation", "fermion", "matfact", "measurement", "oracle", "states",
    "BosonKind", "FermionKind", "IpentError",
    "TwoBosonState", "TwoFermionState", "SingleParticleState",
]
__version__ = "0.1.0"
