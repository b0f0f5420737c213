"""Reduced standard modules of the type-A2 affine Hecke algebra in characteristic p."""

from .chartool import (CaseLabel, CentralParams, Character, S3Elem, Structure, central_params,
                       classify, is_integral, make_character, ordinarize, predicted_factors,
                       q_factor)
from .decomp import composition_series, identify, iso, proper_submodules, spin
from .gf import FFElem, FieldSpec, field_make, ff_enumerate
from .repcore import Rep, central_scalars, eval_word, rep_make
from .stdred import build_reduced_standard, lattice_entries
from .valnum import PConfig, VUnit
from .zoo import SimpleLabel, expected_irreducible, label, make_module

__version__ = "0.1.0"

__all__ = [
    "CaseLabel",
    "CentralParams",
    "Character",
    "S3Elem",
    "Structure",
    "central_params",
    "classify",
    "is_integral",
    "make_character",
    "ordinarize",
    "predicted_factors",
    "q_factor",
    "composition_series",
    "identify",
    "iso",
    "proper_submodules",
    "spin",
    "FFElem",
    "FieldSpec",
    "field_make",
    "ff_enumerate",
    "Rep",
    "central_scalars",
    "eval_word",
    "rep_make",
    "build_reduced_standard",
    "lattice_entries",
    "PConfig",
    "VUnit",
    "SimpleLabel",
    "expected_irreducible",
    "label",
    "make_module",
]
