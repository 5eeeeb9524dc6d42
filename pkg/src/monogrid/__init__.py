"""monogrid: exact independence and domination workbench for monomial grid graphs."""

from ._kernels import available_backends, default_backend_name
from .config import Budget, RunConfig
from .grid_core import (
    ExponentVector,
    MonomialGraph,
    VertexSet,
    adjacent,
    build_graph,
    enumerate_monomials,
    rim_cycle_decomposition,
    slice_graph,
)
from .solver import (
    SolveReport,
    brute_force_alpha,
    count_maximum_independent_sets,
    enumerate_maximum_independent_sets,
    import_graph,
    is_independent,
    max_independent_set,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "ExponentVector",
    "MonomialGraph",
    "RunConfig",
    "SolveReport",
    "VertexSet",
    "adjacent",
    "available_backends",
    "brute_force_alpha",
    "build_graph",
    "count_maximum_independent_sets",
    "default_backend_name",
    "enumerate_maximum_independent_sets",
    "enumerate_monomials",
    "import_graph",
    "is_independent",
    "max_independent_set",
    "rim_cycle_decomposition",
    "slice_graph",
    "__version__",
]
