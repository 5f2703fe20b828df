"""Exact computations in fully ramified Artin-Schreier towers over F_q((t))."""

from .ff import GF, FqElem, FqField
from .laurent import INFINITY, LaurentPoly
from .tower import GaloisElem, LElem, Tower, TowerSpec

__all__ = [
    "GF",
    "FqElem",
    "FqField",
    "INFINITY",
    "LaurentPoly",
    "GaloisElem",
    "LElem",
    "Tower",
    "TowerSpec",
]
