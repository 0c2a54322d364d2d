"""Linear MIM-width of graphs, trees and tree squares."""

from .certificates import (
    LowerBoundCertificate,
    certify_H_square,
    certify_square_lower_bound,
    check_certificate,
)
from .errors import CertificateError, DomainError, InternalError, LmwError, ResourceError
from .families import FamilyInstance, gen_family, gen_H, gen_L, h_tree_layout, l_square_layout
from .graph import (
    BipartiteGraph,
    Graph,
    RootedTree,
    bipartite_cut_graph,
    diameter,
    distance,
    graph_power,
    induced_subgraph,
    subgraph_distance,
)
from .layout import (
    LinearLayout,
    WidthReport,
    cuts,
    lmw_oracle,
    mw_of_layout,
    power_layout_bound,
    power_profile,
)
from .matching import is_bipartite_chain, is_induced_matching, mim_exact
from .tree import DirectedSubtreeTable, construct_tree_layout, find_good_path, k_neighbors, tree_lmw

__version__ = "0.1.0"
