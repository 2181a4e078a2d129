"""Named algebras used throughout the tests and demos."""
from __future__ import annotations

from .gamma import PmvAlgebra, gamma
from .groups import HEIS, Z, direct, lex

__all__ = ["SHIPPED", "LEX_SHIPPED", "get", "canonical_depths"]

SHIPPED: dict[str, PmvAlgebra] = {
    "Z,2": gamma(Z, 2),
    "ZlexZ,(1,0)": gamma(lex(Z, Z), (1, 0)),
    "ZlexZ,(2,1)": gamma(lex(Z, Z), (2, 1)),
    "ZlexZ,(2,0)": gamma(lex(Z, Z), (2, 0)),
    "ZlexZ,(2,2)": gamma(lex(Z, Z), (2, 2)),
    "ZlexZ,(2,-2)": gamma(lex(Z, Z), (2, -2)),
    "Zlex(ZlexZ),(1,0,0)": gamma(lex(Z, lex(Z, Z)), (1, 0, 0)),
    "Heis,(1,0,0)": gamma(HEIS, (1, 0, 0)),
    "ZlexHeis,(1,0,0,0)": gamma(lex(Z, HEIS), (1, 0, 0, 0)),
    "Zlex(ZxZ),(1,0,0)": gamma(lex(Z, direct(Z, Z)), (1, 0, 0)),
}

# algebras carrying a lexicographic split and their canonical tail depths
LEX_SHIPPED: dict[str, tuple[int, ...]] = {
    "ZlexZ,(1,0)": (1,),
    "ZlexZ,(2,1)": (1,),
    "ZlexZ,(2,0)": (1,),
    "ZlexZ,(2,2)": (1,),
    "ZlexZ,(2,-2)": (1,),
    "Zlex(ZlexZ),(1,0,0)": (1, 2),
    "ZlexHeis,(1,0,0,0)": (1,),
    "Zlex(ZxZ),(1,0,0)": (1,),
}


def get(name: str) -> PmvAlgebra:
    return SHIPPED[name]


def canonical_depths(name: str) -> tuple[int, ...]:
    return LEX_SHIPPED.get(name, ())
