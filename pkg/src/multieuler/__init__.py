"""Eulerian circuits and dipaths in directed multigraphs: classification,
construction, two-way doubling and exact circuit counting."""

from .connectivity import (
    SccPartition,
    common_dicircuit,
    is_strongly_connected,
    is_weakly_connected,
    scc,
)
from .core import (
    DegreeProfile,
    Multidigraph,
    MultiGraph,
    Trail,
    count_matrix,
    degree_profile,
    from_count_matrix,
    from_edge_list,
    is_valid_trail,
    parse,
    serialize,
    to_dot,
)
from .counting import (
    ALL_ROTATIONS,
    CYCLIC,
    Convention,
    CountReport,
    FStarReport,
    arborescence_count,
    closed_form,
    count,
    count_best,
    enumerate_circuits,
    fixed_start,
    fstar_search,
)
from .eulerian import (
    EulerClassification,
    Reason,
    Verdict,
    add_dipath,
    add_return_path,
    classify,
    contract_split_trail,
    find_euler_circuit,
    find_euler_path,
    split_transform,
)
from .exceptions import *  # noqa: F401,F403
from .twoway import FamilySpec, double, expand_multiplicity, generate, is_two_way

__version__ = "0.1.0"
