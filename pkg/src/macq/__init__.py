"""Exact computation of E_mu(q, t=infinity) by quantum alcove walks and by
quantum Lakshmibai-Seshadri paths, with the bijection between the two models,
graded Demazure characters, and semi-infinite Bruhat order checks."""
from .charmod import e_t_infinity, gch_demazure, gch_quotient
from .laurent import GradedPolynomial, GradedSeries, specialize
from .rootdata import Coroot, Root, RootDatum, Weight, WeylElement, build_root_datum, parse_type

__all__ = [
    "Coroot", "GradedPolynomial", "GradedSeries", "Root", "RootDatum", "Weight",
    "WeylElement", "build_root_datum", "e_t_infinity", "gch_demazure", "gch_quotient",
    "parse_type", "specialize",
]
