"""Exact hook and block-hook determinant toolkit.

Thin convenience layer over the compiled ``_hookdet`` module: the C++ side
exchanges canonical polynomial strings and JSON, this side turns JSON into
dicts.
"""

import json as _json

from . import _hookdet

__all__ = [
    "hook_matrix",
    "block_matrix",
    "hook_formula",
    "block_formula",
    "det",
    "verify_family",
    "lgv_report",
    "gamma_dot",
    "run_suite",
    "HookdetError",
]

HookdetError = _hookdet.HookdetError

hook_formula = _hookdet.hook_formula
block_formula = _hookdet.block_formula
gamma_dot = _hookdet.gamma_dot


def hook_matrix(shape, m):
    """Order-m hook pattern as {"order": m, "entries": [[...]]}."""
    return _json.loads(_hookdet.hook_matrix_json(shape, m))


def block_matrix(family, n, m):
    """N*m block hook matrix as a matrix dict."""
    return _json.loads(_hookdet.block_matrix_json(family, n, m))


def det(matrix):
    """Exact determinant of a matrix dict, as canonical polynomial text."""
    return _hookdet.det(_json.dumps(matrix))


def verify_family(family, n, m, evals=50, seed=0):
    """Identity checks for one (family, N, m); dict with symbolic_ok etc."""
    return _json.loads(_hookdet.verify_family_json(family, n, m, evals, seed))


def lgv_report(n, m, family=""):
    """Vertex-disjoint path-system enumeration report as a dict."""
    return _json.loads(_hookdet.lgv_report_json(n, m, family))


def run_suite(scope="hooks", seed=0, evals=50):
    """One verification grid; dict with per-case results."""
    return _json.loads(_hookdet.suite_json(scope, seed, evals))
