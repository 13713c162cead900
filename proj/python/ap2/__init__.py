"""Elementary abelian subgroup posets and exact homology for finite p-groups.

The heavy lifting lives in the compiled ``ap2._core`` module; this package
re-exports it and converts the JSON-string reports into dicts.
"""

import json

from ._core import (
    CapError,
    Group,
    InputError,
    build_family,
    center,
    centralizer,
    closure,
    derived_subgroup,
    direct_product,
    from_table,
)
from ._core import analyze_json, check_theorem_json, verify_json

__all__ = [
    "CapError",
    "Group",
    "InputError",
    "analyze",
    "build_family",
    "center",
    "centralizer",
    "check_theorem",
    "closure",
    "derived_subgroup",
    "direct_product",
    "from_table",
    "verify",
]


def analyze(name, group, p, min_rank=2, with_timing=False, max_order=6561):
    """Full poset/complex/homology report for one group, as a dict."""
    return json.loads(
        analyze_json(name, group, p, min_rank, with_timing, max_order)
    )


def check_theorem(group, p, max_order=6561):
    """Same-dimension verdict for one group, as a dict."""
    return json.loads(check_theorem_json(group, p, max_order))


def verify(catalog_path, mode="theorem", prime=None, jobs=1, with_timing=False,
           max_order=6561):
    """Batch verification over a catalog file, as a dict."""
    return json.loads(
        verify_json(catalog_path, mode, prime, jobs, with_timing, max_order)
    )
