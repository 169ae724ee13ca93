"""Exact combinatorics of walks and paths in trees: counting, rewiring
moves, walk-word grammar, and exhaustive extremal verification."""

from .generate import (
    FamilySpec,
    broom,
    double_broom_paths,
    double_broom_walks,
    enumerate_free_trees,
    from_pruefer,
    make_family,
    p_broom,
    path_tree,
    star_tree,
    to_pruefer,
)
from .transforms import (
    BarePath,
    Valency,
    bare_paths,
    dc_transform,
    kc_moves,
    kc_transform,
    valency,
)
from .trees import (
    CanonicalCode,
    Tree,
    canonical_code,
    diameter,
    distance,
    is_isomorphic,
    parse_tree_text,
    format_tree_text,
)
from .verify import (
    BroomProfile,
    CounterexampleResult,
    VerificationReport,
    broom_profile,
    build_counterexample,
    dc_reduce,
    verify_closed_extremal,
    verify_injections,
    verify_kc_monotone,
    verify_path_extremal,
)
from .walks import (
    count_closed_walks,
    count_ell_paths,
    count_walks,
    enumerate_walks,
    wiener,
)
from .words import (
    PathContext,
    Word,
    WordType,
    block_decompose,
    build_context,
    classify,
    conjugate,
    decode_word,
    encode_walk,
    f_map,
    g_even,
    g_odd,
    g_total,
    h_map,
    reverse,
    split_c_block,
)

__version__ = "0.1.0"
