"""Generate, canonicalize and verify circulant and block-circulant Ramsey graphs."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .blockcirc import (BlockCirculantColoring, apply_block_permutation, apply_column_rotation,
                        apply_unit_multiplication, canonicalize_block, is_canonical,
                        is_canonical_prefix,
                        lyndon_rotation, realize_block)
from .circulant import CirculantColoring, realize_circulant, unit_canonical_form
from .errors import ParameterError, ParseError, PartialGraphError, RamseyError, TableRangeError
from .extend import extend_by_one, local_search
from .feasibility import (DeficiencyLedger, EdgeMaxTable, builtin_tables, deficiency_sum_ledger,
                          feasibility_verdict, goodman_triangle_count,
                          triangle_sum_via_neighborhoods, vertex_deficiency)
from .formats import (decode_graph6, emit_blockcirc, emit_circ, encode_graph6, parse_blockcirc,
                      parse_circ, parse_pattern)
from .graph import (UNCOLORED, ColoredCompleteGraph, DegreeHistogram, degree_histogram,
                    mono_triangle_count, neighborhood_subgraph)
from .pattern import (PatternSpec, contains_pattern, contains_pattern_through_edge,
                      is_ramsey_graph)
from .search import SearchJob, enumerate_block_circulant, enumerate_circulant, split_subtrees
from .verify import (are_isomorphic, dedupe_nonisomorphic, enumerate_all_small, verify_ramsey)

__all__ = [
    "BACKEND", "UNCOLORED",
    "BlockCirculantColoring", "CirculantColoring", "ColoredCompleteGraph", "DegreeHistogram",
    "DeficiencyLedger", "EdgeMaxTable", "PatternSpec", "SearchJob",
    "ParameterError", "ParseError", "PartialGraphError", "RamseyError", "TableRangeError",
    "apply_block_permutation", "apply_column_rotation", "apply_unit_multiplication",
    "are_isomorphic", "builtin_tables", "canonicalize_block", "contains_pattern",
    "contains_pattern_through_edge", "decode_graph6", "dedupe_nonisomorphic",
    "deficiency_sum_ledger", "degree_histogram", "emit_blockcirc", "emit_circ",
    "encode_graph6", "enumerate_all_small", "enumerate_block_circulant", "enumerate_circulant",
    "extend_by_one", "feasibility_verdict", "goodman_triangle_count", "is_canonical", "is_canonical_prefix",
    "is_ramsey_graph", "local_search", "lyndon_rotation", "mono_triangle_count",
    "neighborhood_subgraph", "parse_blockcirc", "parse_circ", "parse_pattern",
    "realize_block", "realize_circulant", "split_subtrees", "triangle_sum_via_neighborhoods",
    "unit_canonical_form", "verify_ramsey", "vertex_deficiency",
]
