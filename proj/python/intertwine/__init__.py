"""Classifier and verification harnesses for intertwining operators between
degenerate principal series of GL(n)."""

import json
from fractions import Fraction

from ._core import (
    CharacterParseError,
    IntertwineError,
    bracket_fidelity,
    central_constraint,
    check_equivariance,
    gaussian_binomial,
    incidence_matrix,
    radon_matrix,
    rank_exact,
    run_cli,
    verify_exceptional,
)
from . import _core

__all__ = [
    "CharacterParseError",
    "IntertwineError",
    "bracket_fidelity",
    "central_constraint",
    "check_equivariance",
    "classify",
    "enumerate_family",
    "gaussian_binomial",
    "incidence_matrix",
    "radon_matrix",
    "rank_exact",
    "run_cli",
    "verify_exceptional",
]


def classify(field, blocks, inductive=False):
    """Classification of Hom(chi1 x chi2, chi3 x chi4) as the CLI's JSON object."""
    return json.loads(_core._classify_json(field, list(blocks), inductive))


def enumerate_family(field, n, exponent_bound=1, param_bound=1, seed=0x5EED):
    bound = Fraction(exponent_bound)
    text = f"{bound.numerator}/{bound.denominator}"
    return json.loads(_core._enumerate_family_json(field, n, text, param_bound, seed))
