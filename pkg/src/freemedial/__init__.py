"""Free medial quandles: exact normal forms, affine embeddings and finite-model checks."""

from .errors import AlgebraError
from .finite import FiniteBinaryTable, Permutation, PermGroup, affine_quandle, free_2reductive_symmetric
from .free import (
    Displacement,
    FreeElement,
    FreeQuandle,
    GeneratorSet,
    embed_affine,
    make_f_quandle_context,
    medial_context,
    reductive_context,
    symmetric_context,
    symmetric_reductive2_context,
    unembed_affine,
)
from .poly import LaurentPoly, cyclotomic, factor_symmetric_poly, parse_poly
from .ring import RingElement, RingSpec, crt_residues, inv_t, reduce
from .terms import VarietySpec, decide_identity, normalize, parse, parse_variety

__all__ = [
    "AlgebraError", "FiniteBinaryTable", "Permutation", "PermGroup", "affine_quandle",
    "free_2reductive_symmetric", "Displacement", "FreeElement", "FreeQuandle", "GeneratorSet",
    "embed_affine", "make_f_quandle_context", "medial_context", "reductive_context",
    "symmetric_context", "symmetric_reductive2_context", "unembed_affine", "LaurentPoly",
    "cyclotomic", "factor_symmetric_poly", "parse_poly", "RingElement", "RingSpec",
    "crt_residues", "inv_t", "reduce", "VarietySpec", "decide_identity", "normalize", "parse",
    "parse_variety",
]
