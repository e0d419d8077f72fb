from .module import build_symbol, cocycle_product, essential_symbol
from .schema import FixedPointTorusPoint, SymbolMatrix, TorusPoint

__all__ = [
    "FixedPointTorusPoint",
    "SymbolMatrix",
    "TorusPoint",
    "build_symbol",
    "cocycle_product",
    "essential_symbol",
]
