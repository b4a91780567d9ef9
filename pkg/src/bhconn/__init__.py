"""Balanced hypercubes and their structure/substructure connectivity."""

from .cuts import SubgraphCut, Verdict, construct, cut_c4, cut_k1, cut_k11, cut_k12, cut_k13, verify
from .patterns import Embedding, Shape, count_c4, enumerate_embeddings, is_valid_embedding
from .search import (
    SearchReport,
    g_connectivity,
    structure_connectivity,
    sweep_small_families,
    vertex_connectivity,
)
from .topology import BalancedHypercube, build, subcube

__all__ = [
    "BalancedHypercube",
    "Embedding",
    "SearchReport",
    "Shape",
    "SubgraphCut",
    "Verdict",
    "build",
    "construct",
    "count_c4",
    "cut_c4",
    "cut_k1",
    "cut_k11",
    "cut_k12",
    "cut_k13",
    "enumerate_embeddings",
    "g_connectivity",
    "is_valid_embedding",
    "structure_connectivity",
    "subcube",
    "sweep_small_families",
    "verify",
    "vertex_connectivity",
]
