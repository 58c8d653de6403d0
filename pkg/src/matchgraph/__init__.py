"""Chromatic numbers of matching graphs and general Kneser graphs.

Builders for matching graphs KG(G, rK2) and general Kneser graphs KG(H),
an exact chromatic-number solver with certificates, generalized and
alternating Turan numbers, Eulerian and apex edge orderings with their
alternation-based chromatic lower bounds, Tutte-Berge witnesses, and
monogamous C4 / locally-Eulerian decomposition certificates, plus a CLI
for reproduction tables and a small-graph conjecture scanner.
"""

from .alternation import (
    EdgeOrdering,
    OrderingMinimum,
    alt,
    alt_min,
    alt_sigma,
    chi_lower_bounds,
    ex_alt_sigma,
    ex_salt_sigma,
    matching_chi_lower_bound,
    salt_min,
    salt_sigma,
)
from .coloring import (
    ChromaticCertificate,
    chromatic_number,
    coloring_from_extremal,
    export_dimacs,
    extend_bipartite_matching_coloring,
    greedy_clique,
    is_proper,
)
from .decompositions import (
    C4Decomposition,
    C4SearchResult,
    LocallyEulerianBuild,
    locally_eulerian_from_c4,
    make_block,
    monogamous_c4_decomposition,
    verify_c4_decomposition,
)
from .errors import CapacityError, CertificateError, GraphParseError, NotEulerianError
from .graphs import (
    INFINITE,
    DegreeOrder,
    Graph,
    MultiGraphView,
    degree_order,
    eulerian_tour,
    format_graph,
    is_connected,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_disjoint_matching,
    make_path,
    odd_components,
    odd_girth,
    parse_graph,
    read_graph,
    write_graph,
)
from .hypergraphs import (
    Hypergraph,
    KneserGraph,
    f_subgraph_hypergraph,
    format_hypergraph,
    general_kneser,
    matching_graph,
    matching_hypergraph,
    parse_hypergraph,
)
from .matching import (
    Matching,
    TutteBergeWitness,
    edge_subset_has_r_matching,
    enumerate_matchings,
    has_r_matching,
    matching_number,
    max_matching,
    tutte_berge,
)
from .orderings import (
    LocallyEulerianCertificate,
    StarFormulaReport,
    VerificationResult,
    apex_ordering,
    euler_ordering,
    star_formula_conditions,
    verify_locally_eulerian,
)
from .turan import TuranCertificate, is_f_free, star_lower_bound, turan_matchings

__version__ = "0.1.0"
