"""Exact construction and certification of regular Cayley nut graphs.

The heavy lifting happens in the C++ extension ``_core``; this wrapper turns
its JSON payloads into plain dicts with python ints, so kernel entries keep
arbitrary precision.
"""

import json

from . import _core
from ._core import (
    DEFAULT_SEARCH_WINDOW,
    Graph6ParseError,
    InfeasibleError,
    WindowExceededError,
    circulant_exists,
    circulant_graph6,
    circulant_nullity,
    decode_graph6,
    encode_graph6,
    enumerate_connection_sets,
    fowler_necessary,
    prism_complement_graph6,
    qd16_graph6,
    search_circulant,
)

__all__ = [
    "DEFAULT_SEARCH_WINDOW",
    "Graph6ParseError",
    "InfeasibleError",
    "WindowExceededError",
    "circulant_exists",
    "circulant_graph6",
    "circulant_nullity",
    "construct",
    "decode_graph6",
    "encode_graph6",
    "enumerate_connection_sets",
    "fowler_necessary",
    "prism_complement_graph6",
    "qd16_graph6",
    "search_circulant",
    "verify",
    "verify_edges",
]


def _parse_kernel(entries):
    return [int(x) for x in entries]


def construct(n, d, window=DEFAULT_SEARCH_WINDOW):
    """Build a certified d-regular Cayley nut graph on n vertices.

    Returns a dict with keys graph6, order, degree, kernel (list of int),
    regime, parameters, provenance, verified.  Raises InfeasibleError when no
    such graph exists and WindowExceededError when the circulant search would
    exceed the window.
    """
    out = json.loads(_core.construct_json(n, d, window))
    out["kernel"] = _parse_kernel(out["kernel"])
    return out


def _parse_verdict(payload):
    out = json.loads(payload)
    if out["nut"]:
        out["kernel"] = _parse_kernel(out["kernel"])
    return out


def verify(graph6):
    """Certify a graph6 string: {'nut': bool, 'nullity': int, ...}."""
    return _parse_verdict(_core.verify_graph6_json(graph6))


def verify_edges(n, edges):
    """Certify a graph given as an order and an edge list."""
    return _parse_verdict(_core.verify_edges_json(n, [tuple(e) for e in edges]))
