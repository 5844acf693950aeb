"""Exact Boij-Soederberg combinatorics.

Pure Betti diagrams and their decomposition, supernatural cohomology
tables, and explicit certificates for nonzero homomorphisms between
modules with pure resolutions and between supernatural sheaves.
"""

from .betti import (
    BettiDiagram,
    Decomposition,
    DegreeSequence,
    PureDiagram,
    decompose,
    deg_hom_exists,
    deg_leq,
    degree_sequence,
    pure_diagram,
    shift_reduction,
    validate_degree_sequence,
)
from .core import GLWeight, binomial, horizontal_strips, weyl_dim
from .es_construction import es_setup, free_module, hom_witness, nu_apply, nu_matrix, twist_table, witness_element
from .equivariant import bwb, efw_base_case, efw_shapes, eq_hom_witness, eq_root_hom_exists, eq_supernatural_weight
from .supernatural import (
    RootSequence,
    h_value,
    hom_lower_bound,
    root_hom_exists,
    root_leq,
    root_sequence,
    split_hom_dim,
    table,
)

__version__ = "0.1.0"
