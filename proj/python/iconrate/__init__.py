"""Iconicity rating assignment for sign-language gestures (C++ core)."""

from ._iconrate import (
    AssignConfig,
    Assigned,
    Corpus,
    CongruencyScore,
    IconrateError,
    EvalReport,
    GestureRecord,
    HandProfile,
    Neighbor,
    Profile,
    Sequence,
    Unassigned,
    WordVectorTable,
    assign,
    bucket_location,
    congruency,
    cosine,
    extract_profile,
    find_neighbors,
    hand_descriptor,
    load_corpus,
    load_sequence,
    parse_sequence,
    run_cli,
    score,
    select_keyframes,
    word_similarity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
