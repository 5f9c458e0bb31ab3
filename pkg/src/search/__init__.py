"""Subdivision search: patterns, embeddings, bad edges and planarity."""

from src.search.patterns import PatternId, PatternSpec, BranchSpec, get_pattern, k33_branch_name
from src.search.embedding import (
    SubdivisionEmbedding,
    embedding_errors,
    check_embedding,
    build_embedding,
    k33_embedding,
    k33_paths,
)
from src.search.bad_edges import (
    BadEdgeClass,
    BadEdgeRecord,
    BadEdgeReport,
    classify_bad_edges,
    count_bad_edges,
)
from src.search.subdivision import (
    Objective,
    SubdivisionSearch,
    find_subdivision,
    select_canonical_k33,
)
from src.search.planarity import find_planar_double, is_planar, kuratowski_witness

__all__ = [
    'PatternId',
    'PatternSpec',
    'BranchSpec',
    'get_pattern',
    'k33_branch_name',
    'SubdivisionEmbedding',
    'embedding_errors',
    'check_embedding',
    'build_embedding',
    'k33_embedding',
    'k33_paths',
    'BadEdgeClass',
    'BadEdgeRecord',
    'BadEdgeReport',
    'classify_bad_edges',
    'count_bad_edges',
    'Objective',
    'SubdivisionSearch',
    'find_subdivision',
    'select_canonical_k33',
    'is_planar',
    'kuratowski_witness',
    'find_planar_double',
]
