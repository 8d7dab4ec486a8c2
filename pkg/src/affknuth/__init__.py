"""Affine matrix-ball construction for extended affine permutations, with
Knuth-move graphs on tabloids and their weight monodromy."""
from .ambc import Triple, backward_step, forward_step, phi, psi, southwest_channel, southwest_numbering
from .errors import AffknuthError, InvariantError, ValidationError
from .kernels import BACKEND
from .lattice import Cell
from .perm import AffinePermutation, PartialPermutation
from .stream import Stream, dominant_representative, is_dominant, make_stream
from .tabloid import Partition, Tableau, Tabloid, charge, d_lambda

__all__ = [
    "AffinePermutation",
    "PartialPermutation",
    "Cell",
    "Partition",
    "Tabloid",
    "Tableau",
    "Stream",
    "Triple",
    "phi",
    "psi",
    "forward_step",
    "backward_step",
    "southwest_channel",
    "southwest_numbering",
    "make_stream",
    "is_dominant",
    "dominant_representative",
    "charge",
    "d_lambda",
    "AffknuthError",
    "ValidationError",
    "InvariantError",
    "BACKEND",
]

__version__ = "0.1.0"
