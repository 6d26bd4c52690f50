"""Probe-graph minimum rank, zero forcing and two-parallel-paths recognition."""

from .graph import Graph, ProbeGraph, emit_graph6, parse_graph6

__all__ = ["Graph", "ProbeGraph", "emit_graph6", "parse_graph6"]
__version__ = "0.1.0"
