"""Young diagrams, equivalence classes on X x Z and the Sergeev-Veselov orbit they model."""
from .diagrams import RectConfig, Root
from .classes import EquivClass, LabeledDiagram, enumerate_class
from .svaction import Kappa, SuperVector, build_x, build_x_hat

__all__ = [
    "RectConfig", "Root", "EquivClass", "LabeledDiagram", "enumerate_class",
    "Kappa", "SuperVector", "build_x", "build_x_hat",
]
__version__ = "0.1.0"
