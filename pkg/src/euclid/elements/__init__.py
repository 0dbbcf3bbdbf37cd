"""The proposition catalogue: constructions and theorem validators.

Proposition identifiers are stable strings ("I.1" ... "I.46"); variant
strategies are selected either by keyword argument or by a suffixed
identifier such as "I.44.alnayrizi".
"""

from __future__ import annotations

from ..errors import UnknownProposition
from .basics import (
    p1_equilateral,
    p2_place,
    p3_cut,
    p9_bisect_angle,
    p10_bisect_segment,
    p11_perp_at,
    p12_perp_from,
)
from .triangles import (
    P23_STRATEGIES,
    p22_triangle,
    p23_copy_angle,
    p31_parallel,
    place_triangle_on_ray,
)
from .areas import (
    P42_STRATEGIES,
    P44_STRATEGIES,
    P46_STRATEGIES,
    p42_on_ray,
    p42_parallelogram_eq_triangle,
    p43_complements,
    p44_apply,
    p45_apply_figure,
    p46_square,
    tinemue_matching_angle,
    triangulate,
)
from .theorems import THEOREM_IDS, check_theorem

CONSTRUCTIONS = {
    "I.1": p1_equilateral,
    "I.2": p2_place,
    "I.3": p3_cut,
    "I.9": p9_bisect_angle,
    "I.10": p10_bisect_segment,
    "I.11": p11_perp_at,
    "I.12": p12_perp_from,
    "I.22": p22_triangle,
    "I.23": p23_copy_angle,
    "I.31": p31_parallel,
    "I.42": p42_parallelogram_eq_triangle,
    "I.43": p43_complements,
    "I.44": p44_apply,
    "I.45": p45_apply_figure,
    "I.46": p46_square,
}

STRATEGIES = {
    "I.23": P23_STRATEGIES,
    "I.42": P42_STRATEGIES,
    "I.44": P44_STRATEGIES,
    "I.46": P46_STRATEGIES,
}

# positional parameters: (name, type word) per proposition
PARAM_SPECS = {
    "I.1": (("ab", "segment"),),
    "I.2": (("a", "point"), ("bc", "segment")),
    "I.3": (("greater", "segment"), ("less", "segment")),
    "I.9": (("angle", "angle"),),
    "I.10": (("ab", "segment"),),
    "I.11": (("l", "line"), ("c", "point")),
    "I.12": (("l", "line"), ("c", "point")),
    "I.22": (("a_len", "number"), ("b_len", "number"), ("c_len", "number"),
             ("base_ray", "ray")),
    "I.23": (("target_ray", "ray"), ("model", "angle")),
    "I.31": (("p", "point"), ("l", "line")),
    "I.42": (("t", "figure"), ("d", "angle")),
    "I.43": (("pg", "figure"), ("k", "point")),
    "I.44": (("ab", "segment"), ("t", "figure"), ("d", "angle")),
    "I.45": (("d_angle", "angle"), ("f", "figure")),
    "I.46": (("ab", "segment"),),
}

# the type of each proposition's principal result
RESULT_TYPES = {
    "I.1": "figure", "I.2": "segment", "I.3": "point", "I.9": "ray",
    "I.10": "point", "I.11": "line", "I.12": "line", "I.22": "figure",
    "I.23": "angle", "I.31": "line", "I.42": "figure", "I.43": "figure",
    "I.44": "figure", "I.45": "figure", "I.46": "figure",
}

STRATEGY_SUFFIXES = {
    "euclid": ".euclid",
    "proclus": ".proclus",
    "albertus": ".albertus",
    "commandinus": ".commandinus",
    "clavius": ".clavius",
    "campanus": ".campanus",
    "alnayrizi": ".alnayrizi",
    "euclid_superposition": ".euclid",
    "robert_of_chester": ".chester",
    "tinemue_equal_case": ".tinemue",
    "campanus_first": ".campanus",
    "campanus_second": ".campanus2",
}


def split_identifier(prop_id: str) -> tuple[str, str | None]:
    """Split e.g. "I.44.chester" into ("I.44", "robert_of_chester")."""
    parts = prop_id.split(".")
    if len(parts) == 2:
        return prop_id, None
    if len(parts) == 3:
        base = ".".join(parts[:2])
        suffix = "." + parts[2]
        for strategy, s in STRATEGY_SUFFIXES.items():
            if s == suffix and strategy in STRATEGIES.get(base, ()):
                return base, strategy
    raise UnknownProposition(f"unknown proposition identifier {prop_id!r}")


def construction(prop_id: str):
    base, strategy = split_identifier(prop_id)
    if base not in CONSTRUCTIONS:
        raise UnknownProposition(f"unknown proposition identifier {prop_id!r}")
    return CONSTRUCTIONS[base], strategy


__all__ = [
    "CONSTRUCTIONS", "STRATEGIES", "PARAM_SPECS", "RESULT_TYPES",
    "THEOREM_IDS",
    "check_theorem", "construction", "split_identifier",
    "p1_equilateral", "p2_place", "p3_cut", "p9_bisect_angle",
    "p10_bisect_segment", "p11_perp_at", "p12_perp_from",
    "p22_triangle", "place_triangle_on_ray", "p23_copy_angle", "p31_parallel",
    "p42_parallelogram_eq_triangle", "p42_on_ray", "p43_complements",
    "p44_apply", "p45_apply_figure", "p46_square", "triangulate",
    "tinemue_matching_angle",
]
