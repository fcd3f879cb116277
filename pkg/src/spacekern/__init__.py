"""Space-metered kernelization toolkit.

Kernelizations for Path Contraction, Feedback Vertex Set, and Cluster
Editing/Deletion that treat the input graph as read-only and meter every
word of mutable working memory.
"""

from .graphcore import (
    ExclusionView,
    GraphFormatError,
    Kernel,
    KernelGraph,
    NoInstance,
    SpaceMeter,
    StaticGraph,
    dump_graph,
    load_graph,
)
from .pathcontraction import kernelize_path_contraction
from .fvs import approx_fvs, kernelize_fvs
from .cluster import kernelize_cluster, scan_conflicts
from .oracle import exact_cluster, exact_fvs, exact_path_contraction

__all__ = [
    "ExclusionView",
    "GraphFormatError",
    "Kernel",
    "KernelGraph",
    "NoInstance",
    "SpaceMeter",
    "StaticGraph",
    "approx_fvs",
    "dump_graph",
    "exact_cluster",
    "exact_fvs",
    "exact_path_contraction",
    "kernelize_cluster",
    "kernelize_fvs",
    "kernelize_path_contraction",
    "load_graph",
    "scan_conflicts",
]
