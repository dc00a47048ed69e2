"""qsrlab: detection, certification and search for quasi-semiregular
elements in finite permutation groups."""

from .perm import Permutation, CycleType
from .group import PermGroup

__version__ = '0.1.0'

__all__ = ['Permutation', 'CycleType', 'PermGroup', '__version__']
