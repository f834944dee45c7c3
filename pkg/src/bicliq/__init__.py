"""Exact computation laboratory: biclique partitions of split graphs, 0/1
matrix ranks, tournament constructions, and squashed-cube addressings."""

from . import _kernels
from .addressing import (
    AddressFamily,
    AddressingReport,
    addressing_to_partition,
    balanced_addressing_report,
    distance,
    joker_count,
    neighborly_check,
    partition_to_addressing,
    subcube_union_size,
    volume,
)
from .bp import (
    BpResult,
    StructuralReport,
    bp_exact,
    clique_number,
    gp_lower_bound,
    lift_bipartite_partition,
    shift_to_s_max,
    star_partition,
    structural_checks,
)
from .errors import BicliqError, BudgetError, ParseError, PreconditionError
from .generators import (
    FamilyInstance,
    bordered_tournament,
    counterexample_fixture,
    family_graph,
    parity_tournament,
    random_split_graph,
    singular_tournament_9,
)
from .graphs import (
    Biclique,
    BicliquePartition,
    CliqueSet,
    Graph,
    ValidationReport,
    canonical_clique_order,
    format_graph,
    maximal_cliques,
    parse_graph,
    partition_from_dict,
    partition_to_dict,
    verify_biclique_partition,
)
from .ranks import (
    BinaryMatrix,
    BinaryRankResult,
    RankReport,
    Rectangle,
    RectanglePartition,
    RectangleValidationReport,
    TermRankResult,
    binary_rank_exact,
    format_matrix,
    kernel_check,
    parse_matrix,
    rank_report,
    real_rank,
    term_rank,
    tournament_check,
    validate_rectangle_partition,
)
from .splits import (
    NotSplit,
    SplitClass,
    SplitKind,
    SplitPartition,
    classify_split,
    mc_complement_split,
    recognize_split,
    validate_split_partition,
)

KERNEL_BACKEND = _kernels.ACTIVE

__version__ = "0.1.0"
