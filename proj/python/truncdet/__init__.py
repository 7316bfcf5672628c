"""Determinantal ideals of generic matrices over truncated polynomial rings.

Thin wrapper over the C++ extension: each function parses the JSON
document the core produces, so the dict layout matches the CLI output
and the published schemas field for field.
"""

import json
import os


def _load_core():
    try:
        from . import _core  # installed layout: extension inside the package

        return _core
    except ImportError:
        ext_dir = os.environ.get("TRUNCDET_EXT_DIR")
        if not ext_dir:
            raise
        import importlib.util
        import sys

        for name in sorted(os.listdir(ext_dir)):
            if name.startswith("_core.") and name.endswith((".so", ".pyd")):
                spec = importlib.util.spec_from_file_location(
                    "truncdet._core", os.path.join(ext_dir, name)
                )
                module = importlib.util.module_from_spec(spec)
                sys.modules["truncdet._core"] = module
                spec.loader.exec_module(module)
                return module
        raise


_core = _load_core()

CapExceeded = _core.CapExceeded
BudgetExceeded = _core.BudgetExceeded

__version__ = "0.1.0"
__all__ = [
    "BudgetExceeded",
    "CapExceeded",
    "census",
    "count",
    "gb_check",
    "hilbert",
    "ideal",
    "ideal_text",
    "intersection_witness",
    "separation_witness",
    "variety_codim",
]


def ideal(m, n, r, k, p=0):
    """Generators of I^{m,n}_{r,k}; p=0 works over the rationals."""
    return json.loads(_core.ideal_json(m, n, r, k, p))


def ideal_text(m, n, r, k, p=0):
    """Generators in the textual exchange format."""
    return _core.ideal_text(m, n, r, k, p)


def gb_check(m, k, max_steps=None):
    """Groebner verification report for the m x m determinant coefficients."""
    if max_steps is None:
        return json.loads(_core.gb_check_json(m, k))
    return json.loads(_core.gb_check_json(m, k, max_steps))


def hilbert(m, k, max_degree=8):
    """Hilbert function, f-vector and degree of the maximal-minor quotient."""
    return json.loads(_core.hilbert_json(m, k, max_degree))


def census(m, n, r, k):
    """Irreducible component census of Z^{m,n}_{r,k}."""
    return json.loads(_core.census_json(m, n, r, k))


def count(m, n, r, k, q, ring_level=False, cap=1 << 26):
    """Exhaustive F_q point count of Z^{m,n}_{r,k}.

    Raises CapExceeded when q^{mnk} exceeds the candidate cap.
    """
    return json.loads(_core.count_json(m, n, r, k, q, ring_level, cap))


def separation_witness(m, n, k, s, alpha, p=0):
    """Witness point separating component X_s from the smaller-rank ones."""
    return json.loads(_core.separation_json(m, n, k, s, alpha, p))


def intersection_witness(m, n, k, p=0):
    """Witness point on the intersection of two distinct components."""
    return json.loads(_core.intersection_json(m, n, k, p))


def variety_codim(m, n, r, k):
    """Codimension of Z^{m,n}_{r,k} in affine mnk-space."""
    return _core.variety_codim(m, n, r, k)
