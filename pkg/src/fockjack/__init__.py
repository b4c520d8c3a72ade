"""Exact computer algebra for Jack polynomials, Fock-module screening vectors,
zero-mode polynomials and truncated characters of the (p+, p-) W-algebra."""

from .errors import FockJackError
from .fock import FockElement, FockWeight, ModelParams, model, weight
from .jack import JackPair, b_lambda, eval_P, eval_Q, jack
from .partitions import Partition
from .scalars import EpsSeries, KappaFunction, QuadScalar
from .screening import SolitonLabel, extended_weight, proportionality, singular_vector, struct_const
from .symfun import SymPoly
from .virchar import CharSeries, felder_euler, fock_character, socle_constituents, solve_simple_characters
from .walgebra import g_polys, kac_table, omega_poly, rep_check, simple_census, zhu_table

__version__ = "0.1.0"

__all__ = [
    "CharSeries",
    "EpsSeries",
    "FockElement",
    "FockJackError",
    "FockWeight",
    "JackPair",
    "KappaFunction",
    "ModelParams",
    "Partition",
    "QuadScalar",
    "SolitonLabel",
    "SymPoly",
    "b_lambda",
    "eval_P",
    "eval_Q",
    "extended_weight",
    "felder_euler",
    "fock_character",
    "g_polys",
    "jack",
    "kac_table",
    "model",
    "omega_poly",
    "proportionality",
    "rep_check",
    "simple_census",
    "singular_vector",
    "socle_constituents",
    "solve_simple_characters",
    "struct_const",
    "weight",
    "zhu_table",
]
