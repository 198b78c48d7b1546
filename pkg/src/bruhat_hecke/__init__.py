"""0-Hecke modules from intervals in the left weak order."""

from __future__ import annotations

from .comp import Composition, QSymElement
from .hecke import HeckeElement
from .hmod import HModule, ModuleMap, ch, is_isomorphic
from .interval_mod import IntervalModule, build, induce, restriction, twist
from .perm import Permutation
from .weak_order import Interval, interval

__all__ = [
    "Composition",
    "HModule",
    "HeckeElement",
    "Interval",
    "IntervalModule",
    "ModuleMap",
    "Permutation",
    "QSymElement",
    "build",
    "ch",
    "induce",
    "interval",
    "is_isomorphic",
    "restriction",
    "twist",
]
