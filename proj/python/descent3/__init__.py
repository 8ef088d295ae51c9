"""Cubic descent on Mordell curves y^2 = x^3 + 16D."""

import json

from ._core import (
    Error,
    analyze_json,
    class_group,
    enumerate_classes,
    equivalent,
    family_disc,
    form_disc,
    hasse_verdict,
    is_cube,
    make_seed,
    r3_from_fields,
    reduce_form,
    seed_from_disc,
)


def analyze(m, n, **kwargs):
    """Full analysis report for the seed (m, n) as a dict."""
    return json.loads(analyze_json(m, n, **kwargs))


__all__ = [
    "Error",
    "analyze",
    "analyze_json",
    "class_group",
    "enumerate_classes",
    "equivalent",
    "family_disc",
    "form_disc",
    "hasse_verdict",
    "is_cube",
    "make_seed",
    "r3_from_fields",
    "reduce_form",
    "seed_from_disc",
]
