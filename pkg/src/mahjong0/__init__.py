"""Analysis engine for the three-suit Mahjong game M0."""

from .tiles import (
    Hand14,
    Tile,
    BadToken,
    FiveIdentical,
    HandError,
    WrongCount,
    format_hand,
    hand_distance,
    neighbours,
    parse_hand,
    pure_hand,
    replace_tile,
    residual_sequence,
    set_sequence,
    split_suits,
    to_bcd_type,
)
from .melds import (
    MeldKind,
    classify,
    family_profiles,
    is_worst_pure_k_tile,
    max_disjoint_melds,
    max_disjoint_pmelds,
)
from .decomp import (
    INFINITE,
    Decomposition,
    Incompletable,
    InvalidPart,
    NotAPartition,
    PDecomposition,
    complete_decomposition,
    cost,
    is_complete,
    is_saturated,
    remainder,
    saturate,
)
from .deficiency import (
    DeficiencyResult,
    deficiency,
    deficiency_of_counts,
    deficiency_value,
    is_deficiency3_pure,
    is_deficiency6,
)
from .oracle import (
    CensusReport,
    bfs_deficiency,
    enumerate_pure_14tiles,
    pure_census,
    pure_deficiency_map,
)
from .policy import (
    AdviceReport,
    advise,
    HorizonTooLarge,
    KnowledgeBase,
    Underflow,
    delta,
    discard1,
    discard_k,
    format_kb,
    kb_initial,
    kb_observe_discard,
    parse_kb,
    val_k,
)

__version__ = "0.1.0"
