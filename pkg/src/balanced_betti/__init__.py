"""Graded Betti numbers of balanced simplicial complexes and their upper bounds."""

from .bounds import *  # noqa: F401,F403
from .complex import ComplexError, SimplicialComplex, clique_complex, from_facets, propose_coloring
from .generators import *  # noqa: F401,F403
from .hochster import (
    BettiTable,
    CapExceeded,
    check_poincare_duality,
    graded_betti,
    hilbert_checksum,
    linear_strand,
)
from .homology import GF2, QQ, FieldSpec, boundary_matrix, matrix_rank, reduced_homology_dims
from .lex import *  # noqa: F401,F403

__version__ = "0.1.0"
