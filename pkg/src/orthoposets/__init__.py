"""Finite orthoposets: commutation relations, axiom checks, constructions
and block enumeration."""

from .axioms import axiom_ladder, check_orthomodular, find_o6, is_orthomodular
from .blocks import (
    SubStructure,
    boolean_block_decomposition,
    delta_blocks,
    is_delta_block,
    is_sub_ortholattice,
    maximal_boolean_subalgebras,
    maximal_sub_ortholattices,
)
from .commutation import arrow, c_relation, commutator_d, delta, factorize, is_central
from .constructions import (
    SubsetFamily,
    build_balanced,
    build_pnk,
    direct_product,
    interval_orthoposet,
    load_fixture,
    ortho_closure,
    star_sublattice,
)
from .formats import read_structure, write_structure
from .ortho import AxiomReport, OrthoPoset, Verdict
from .poset import FinitePoset, build_from_covers

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "FinitePoset",
    "OrthoPoset",
    "SubStructure",
    "SubsetFamily",
    "Verdict",
    "arrow",
    "axiom_ladder",
    "boolean_block_decomposition",
    "build_balanced",
    "build_from_covers",
    "build_pnk",
    "c_relation",
    "check_orthomodular",
    "commutator_d",
    "delta",
    "delta_blocks",
    "direct_product",
    "factorize",
    "find_o6",
    "interval_orthoposet",
    "is_central",
    "is_delta_block",
    "is_orthomodular",
    "is_sub_ortholattice",
    "load_fixture",
    "maximal_boolean_subalgebras",
    "maximal_sub_ortholattices",
    "ortho_closure",
    "read_structure",
    "star_sublattice",
    "write_structure",
]
