"""Exact torsion subgroups and mod-2 Galois images of elliptic curves over Q."""

from .curves import INFINITY, LongModel, Point, ShortModel, SingularCurveError, long_to_short
from .eisenstein import EisInt, eis_factor, eis_gcd
from .fermat import FermatParams, FermatSolution, decompose, enumerate_solutions, param_forward
from .galois2 import Mod2Image, discriminant_is_square, mod2_image, two_torsion_order
from .torsion import TorsionGroup, torsion_subgroup

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "EisInt",
    "FermatParams",
    "FermatSolution",
    "LongModel",
    "Mod2Image",
    "Point",
    "ShortModel",
    "SingularCurveError",
    "TorsionGroup",
    "decompose",
    "discriminant_is_square",
    "eis_factor",
    "eis_gcd",
    "enumerate_solutions",
    "long_to_short",
    "mod2_image",
    "param_forward",
    "torsion_subgroup",
    "two_torsion_order",
]
