"""Exact spectral analysis of almost-bipartite Q-polynomial distance-regular graphs."""

from ._core import (
    GraphError,
    array_spectrum,
    classify,
    construct,
    evaluate_candidate,
    graph_spectrum,
    intersection_array,
    parse_record_line,
    run_cli,
)

__all__ = [
    "GraphError",
    "array_spectrum",
    "classify",
    "construct",
    "evaluate_candidate",
    "graph_spectrum",
    "intersection_array",
    "parse_record_line",
    "run_cli",
]
