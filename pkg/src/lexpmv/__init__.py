"""Pseudo MV-algebras Γ(G, u) over structural ℓ-groups and their lexicographic ideals.

Quick start::

    >>> from lexpmv import parse_spec, tail_ideal, classify_ideal
    >>> m = parse_spec("Gamma(Z lex Z, (2,1))").algebra
    >>> classify_ideal(tail_ideal(m, 1)).label
    'WeaklyLexicographic'
"""
from .groups import *  # noqa: F401,F403
from .gamma import *  # noqa: F401,F403
from .effect import *  # noqa: F401,F403
from .ideals import *  # noqa: F401,F403
from .representation import *  # noqa: F401,F403
from .parsing import *  # noqa: F401,F403
from .terms import *  # noqa: F401,F403
from .report import Check, Report, SCHEMA

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
