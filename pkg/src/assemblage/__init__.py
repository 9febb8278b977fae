"""Exact assembly indices of strings, compression comparators, experiments."""

from .core import (
    DEFAULT_LENGTH_CAP,
    AssemblyPath,
    AssemblyResult,
    EmptyObjectError,
    JoinStep,
    assembly_index,
    assembly_lower_bound,
    assembly_upper_bound,
    canonicalize,
    doubling_string,
    join,
)
from .ensemble import (
    Ensemble,
    EnsembleFormatError,
    InexactIndexError,
    assembly_A,
    ensemble_terms,
    load_ensemble,
    parse_ensemble,
)
from .entropy import shannon_entropy
from .experiments import (
    ComparisonRecord,
    ExperimentConfig,
    ExperimentReport,
    counterexample_suite,
    enumerate_distinct_rearrangements,
    measure_string,
    run_comparison,
    sample_rearrangements,
    scaling_table,
)
from .huffman import (
    HuffmanDecodeError,
    HuffmanNode,
    assign_codes,
    build_frequency_table,
    build_huffman_tree,
    huffman_decode,
    huffman_encode,
    pack_bits,
    unpack_bits,
)
from .lzw import (
    CompressedStream,
    LzwDecodeError,
    lzw_compress,
    lzw_decompress,
    lzw_longest_reachable,
)
from .oracle import ORACLE_MAX_LENGTH, OracleBudgetError, oracle_assembly_index
from .stats import Moments, integer_histogram, moments, moments_from_histogram, pearson

__all__ = [
    "DEFAULT_LENGTH_CAP",
    "ORACLE_MAX_LENGTH",
    "AssemblyPath",
    "AssemblyResult",
    "ComparisonRecord",
    "CompressedStream",
    "EmptyObjectError",
    "Ensemble",
    "EnsembleFormatError",
    "ExperimentConfig",
    "ExperimentReport",
    "HuffmanDecodeError",
    "HuffmanNode",
    "InexactIndexError",
    "JoinStep",
    "LzwDecodeError",
    "Moments",
    "OracleBudgetError",
    "assembly_A",
    "assembly_index",
    "assembly_lower_bound",
    "assembly_upper_bound",
    "assign_codes",
    "build_frequency_table",
    "build_huffman_tree",
    "canonicalize",
    "counterexample_suite",
    "doubling_string",
    "ensemble_terms",
    "enumerate_distinct_rearrangements",
    "huffman_decode",
    "huffman_encode",
    "integer_histogram",
    "join",
    "load_ensemble",
    "lzw_compress",
    "lzw_decompress",
    "lzw_longest_reachable",
    "measure_string",
    "moments",
    "moments_from_histogram",
    "oracle_assembly_index",
    "pack_bits",
    "parse_ensemble",
    "pearson",
    "run_comparison",
    "sample_rearrangements",
    "scaling_table",
    "shannon_entropy",
    "unpack_bits",
]

__version__ = "0.1.0"
