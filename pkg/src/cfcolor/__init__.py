"""Conflict-free and unique-maximum hypergraph coloring."""
from .hypergraph import (ContractError, Graph, Hypergraph, InputError, Regime, delaunay_graph,
                         induced_sub, verify)

__all__ = ["ContractError", "Graph", "Hypergraph", "InputError", "Regime", "delaunay_graph",
           "induced_sub", "verify"]
