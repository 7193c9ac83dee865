"""Analogical alternation-pattern mining and wug-test scoring."""

from .align import MatchBlock, longest_match, matching_blocks
from .errors import AnamorphError, DataError
from .evaluation import EvalReport, evaluate, pearson, spearman
from .fap import (
    FapAssignment,
    FapCandidate,
    FapConfig,
    MiningResult,
    WpCoverage,
    align_wps,
    column_wps,
    mine_faps,
    screen_candidates,
    select_fap,
)
from .lexicon import (
    Dataset,
    DatasetStats,
    LexEntry,
    PhonemeInventory,
    build_inventory,
    dataset_stats,
    load_dataset,
    merge_datasets,
    reorder_particle,
    tokenize,
)
from .pattern import (
    VAR,
    AlternationPattern,
    WordPattern,
    ap_of_wps,
    bap,
    bap_bindings,
    commonality_pattern,
    enumerate_aps,
    generalizations,
    instantiate,
    is_formal_analogy,
    matches,
)
from .score import M4Scorer, WugScore, m4_score, score_file
from .series import BapClass, FormPair, class_similar_forms, index_by_bap

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
