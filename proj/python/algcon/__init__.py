"""Algebraic connectivity, clique number and extremal-graph verification."""

import json

from ._algcon import *  # noqa: F401,F403
from ._algcon import (
    AlgconError,
    _erdos_stone_trend_json,
    _sandwich_report_json,
    _verify_max_theorem_json,
    _verify_min_theorem_json,
)

__version__ = "0.1.0"


def sandwich_report(g):
    """Clique bounds, degree chain and flags for g as a dict."""
    return json.loads(_sandwich_report_json(g))


def verify_max_theorem(n, r, guard=7, jobs=1):
    """Certificate for the largest alpha over non-complete K_{r+1}-free graphs of order n."""
    return json.loads(_verify_max_theorem_json(n, r, guard, jobs))


def verify_min_theorem(n, r, guard=7, jobs=1):
    """Certificate for the smallest alpha over connected graphs of order n with clique number r."""
    return json.loads(_verify_min_theorem_json(n, r, guard, jobs))


def erdos_stone_trend(r, n_max):
    return json.loads(_erdos_stone_trend_json(r, n_max))
