"""
Tubing lattices of filled connected graphs, their maximal chains, and the
tableau bijections and quasisymmetric functions attached to them.
"""

from __future__ import annotations

from .errors import ArgumentError, CapacityError, InvariantError
from .graph import SimpleGraph, complete, lollipop, parse_graph, path
from .tubing import TubingLattice, build_lattice, longest_chains, maximal_chains, shortest_chains

__all__ = [
    "ArgumentError", "CapacityError", "InvariantError",
    "SimpleGraph", "complete", "lollipop", "parse_graph", "path",
    "TubingLattice", "build_lattice", "longest_chains", "maximal_chains", "shortest_chains",
]

__version__ = "0.1.0"
