"""Exact Cayley-Menger evaluation and positive-dominance certification."""

import json

from ._core import (
    anti_certify,
    case_names,
    certify_on_simplex,
    certify_text,
    chambers_in,
    chambers_outside,
    combination,
    f,
    f_determinant,
    g,
    is_tetrahedral,
    lengthen_check,
    named_point,
    partition_check,
    verify_witness_line,
)
from . import _core


def run_case(name, anticertify=True, parallel=False, seed=1, soundness_samples=200):
    """Run a registered case and return its report as a dict."""
    return json.loads(_core.run_case_json(name, anticertify, parallel, seed, soundness_samples))


def explore(beta, point):
    return json.loads(_core.explore_json(beta, point))


__all__ = [
    "anti_certify",
    "case_names",
    "certify_on_simplex",
    "certify_text",
    "chambers_in",
    "chambers_outside",
    "combination",
    "explore",
    "f",
    "f_determinant",
    "g",
    "is_tetrahedral",
    "lengthen_check",
    "named_point",
    "partition_check",
    "run_case",
    "verify_witness_line",
]
