"""Runnable experiments: permutation comparison, scaling table, counterexample.

The permutation experiment draws seeded uniform rearrangements of a base
string (or enumerates every distinct arrangement), measures the exact
assembly index and the comparator measures on each, and summarizes the
relationship: Pearson correlation against both LZW size metrics, and the
moments plus unit-bin histogram of the (assembly index - LZW size)
differences.

Determinism: strings are generated serially from the seed first; the
per-string measures are pure, so fanning them out to worker processes and
reassembling in generation order gives identical reports for any worker
count.  The RNG is numpy's PCG64, which is stable across platforms.
"""

from __future__ import annotations

import math
import multiprocessing
import time
from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_LENGTH_CAP, assembly_index
from .ensemble import InexactIndexError
from .entropy import shannon_entropy
from .huffman import assign_codes, build_frequency_table, build_huffman_tree, huffman_encode
from .lzw import lzw_compress, lzw_longest_reachable
from .oracle import oracle_assembly_index
from .stats import Moments, integer_histogram, moments, pearson

DEFAULT_BASE = "zbzbczbzbczbzbc"
DEFAULT_SAMPLES = 10_000
DEFAULT_SEED = 0x5EED_A55E_0B1E_C75
GENERATOR_NAME = "numpy-pcg64"
SIZE_METRICS = ("lzw_bytes", "lzw_codes")
ENUMERATION_GUARD = 10_000_000


class EnumerationGuardError(ValueError):
    """Too many distinct rearrangements to enumerate."""


@dataclass(frozen=True)
class ExperimentConfig:
    base: str = DEFAULT_BASE
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    mode: str = "sampled"  # or "exhaustive": samples is then ignored
    size_metric: str = "lzw_bytes"
    workers: int = 1
    length_cap: int = DEFAULT_LENGTH_CAP

    def __post_init__(self) -> None:
        if not self.base:
            raise ValueError("base string must be non-empty")
        if len(self.base) > self.length_cap:
            raise ValueError("base string exceeds the exact-index length cap")
        if self.mode not in ("sampled", "exhaustive"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "sampled" and self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.size_metric not in SIZE_METRICS:
            raise ValueError(f"size_metric must be one of {SIZE_METRICS}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


@dataclass(frozen=True)
class ComparisonRecord:
    string: str
    assembly_index: int
    lzw_codes: int
    lzw_bytes: int
    huffman_bits: int
    entropy: float

    def metric(self, name: str) -> int:
        if name not in SIZE_METRICS:
            raise ValueError(f"unknown size metric {name!r}")
        return getattr(self, name)


@dataclass(frozen=True)
class ExperimentReport:
    config: ExperimentConfig
    records: tuple[ComparisonRecord, ...]
    pearson_by_metric: dict[str, float | None]
    difference_moments: Moments
    histogram: list[tuple[int, int]]
    bin_width: int
    generator: str
    wall_time_s: float

    @property
    def pearson_r(self) -> float | None:
        return self.pearson_by_metric[self.config.size_metric]


def sample_rearrangements(base: str, k: int, seed: int) -> list[str]:
    """k independent uniform shuffles of base's symbols (duplicates allowed)."""
    if not base:
        raise ValueError("base string must be non-empty")
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = np.random.default_rng(seed)
    symbols = np.array(list(base))
    return ["".join(symbols[rng.permutation(len(symbols))]) for _ in range(k)]


def count_distinct_rearrangements(base: str) -> int:
    """Multinomial len! / prod(count!) over the symbol multiplicities."""
    if not base:
        raise ValueError("base string must be non-empty")
    total = math.factorial(len(base))
    for sym in set(base):
        total //= math.factorial(base.count(sym))
    return total


def enumerate_distinct_rearrangements(base: str):
    """Yield every distinct arrangement once, in lexicographic order."""
    count = count_distinct_rearrangements(base)
    if count > ENUMERATION_GUARD:
        raise EnumerationGuardError(
            f"{count} distinct rearrangements exceed the guard of {ENUMERATION_GUARD}"
        )
    chars = sorted(base)
    n = len(chars)
    while True:
        yield "".join(chars)
        # classic next-permutation
        i = n - 2
        while i >= 0 and chars[i] >= chars[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while chars[j] <= chars[i]:
            j -= 1
        chars[i], chars[j] = chars[j], chars[i]
        chars[i + 1 :] = reversed(chars[i + 1 :])


def measure_string(s: str, length_cap: int = DEFAULT_LENGTH_CAP) -> ComparisonRecord:
    """All measures of one string; the assembly index must come out exact."""
    result = assembly_index(s, length_cap)
    if not result.exact:
        raise InexactIndexError(
            f"assembly index of {s!r} is only bracketed under cap {length_cap}"
        )
    stream = lzw_compress(s)
    table = build_frequency_table(s)
    codes = assign_codes(build_huffman_tree(table))
    return ComparisonRecord(
        string=s,
        assembly_index=result.index,
        lzw_codes=stream.code_count,
        lzw_bytes=stream.byte_size,
        huffman_bits=len(huffman_encode(s, codes)),
        entropy=shannon_entropy(table),
    )


def _measure_job(args: tuple[str, int]) -> ComparisonRecord:
    return measure_string(*args)


def run_comparison(config: ExperimentConfig) -> ExperimentReport:
    start = time.perf_counter()
    if config.mode == "sampled":
        strings = sample_rearrangements(config.base, config.samples, config.seed)
    else:
        strings = list(enumerate_distinct_rearrangements(config.base))
    jobs = [(s, config.length_cap) for s in strings]
    if config.workers > 1:
        with multiprocessing.get_context("fork").Pool(config.workers) as pool:
            records = tuple(pool.map(_measure_job, jobs, chunksize=64))
    else:
        records = tuple(map(_measure_job, jobs))

    indices = [float(r.assembly_index) for r in records]
    pearson_by_metric: dict[str, float | None] = {}
    for name in SIZE_METRICS:
        sizes = [float(r.metric(name)) for r in records]
        try:
            pearson_by_metric[name] = pearson(indices, sizes)
        except ValueError:
            pearson_by_metric[name] = None

    diffs = [r.assembly_index - r.metric(config.size_metric) for r in records]
    return ExperimentReport(
        config=config,
        records=records,
        pearson_by_metric=pearson_by_metric,
        difference_moments=moments(diffs),
        histogram=integer_histogram(diffs, 1),
        bin_width=1,
        generator=GENERATOR_NAME,
        wall_time_s=time.perf_counter() - start,
    )


@dataclass(frozen=True)
class ScalingRow:
    steps: int
    lzw_closed_form: int
    lzw_measured: int
    assembly_longest: int
    assembly_steps_verified: int

    @property
    def lzw_agrees(self) -> bool:
        return self.lzw_closed_form == self.lzw_measured


def _measured_longest_single_symbol(n: int, sym: str = "z") -> int:
    """Largest L with lzw_compress(sym * L).code_count == n, by direct probing."""
    length = lzw_longest_reachable(n)
    while lzw_compress(sym * length).code_count > n:
        length -= 1
    while lzw_compress(sym * (length + 1)).code_count == n:
        length += 1
    if lzw_compress(sym * length).code_count != n:
        raise RuntimeError(f"no single-symbol string compresses to exactly {n} codes")
    return length


def scaling_table(max_steps: int) -> list[ScalingRow]:
    """Longest single-symbol string reachable in n steps: LZW vs assembly.

    The LZW column reports both the closed form n(n+1)/2 and the length
    measured from the compressor, so any disagreement is visible instead
    of silently resolved.  The assembly column 2**(n-1) is verified with
    the exact index of the doubled string.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    rows = []
    for n in range(1, max_steps + 1):
        doubled = "z" * 2 ** (n - 1)
        verified = assembly_index(doubled, length_cap=max(len(doubled), DEFAULT_LENGTH_CAP))
        if not verified.exact:
            raise InexactIndexError(f"doubling string for n={n} came out inexact")
        rows.append(
            ScalingRow(
                steps=n,
                lzw_closed_form=lzw_longest_reachable(n),
                lzw_measured=_measured_longest_single_symbol(n),
                assembly_longest=len(doubled),
                assembly_steps_verified=verified.index + 1,
            )
        )
    return rows


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def counterexample_suite() -> list[CheckResult]:
    """The two-string regression gate: equal Huffman artifacts, unequal indices.

    Checks the strings "zbzbzc" (index 4) and "zzzbbc" (index 5): identical
    frequency tables, trees, codebooks, encoded lengths, bit counts and
    entropies, yet different assembly indices, a gap the encoded bitstreams
    inherit.
    """
    first, second = "zbzbzc", "zzzbbc"
    expected_codes = {"z": "1", "b": "01", "c": "00"}
    expected_bits = {"zbzbzc": "101101100", "zzzbbc": "111010100"}

    checks: list[CheckResult] = []

    def check(name: str, passed: bool, detail: str) -> None:
        checks.append(CheckResult(name, passed, detail))

    a1 = assembly_index(first).index
    a2 = assembly_index(second).index
    check("assembly_index_first", a1 == 4, f"a({first}) = {a1}, expected 4")
    check("assembly_index_second", a2 == 5, f"a({second}) = {a2}, expected 5")
    check(
        "oracle_agreement",
        oracle_assembly_index(first) == a1 and oracle_assembly_index(second) == a2,
        "exhaustive oracle agrees with the search on both strings",
    )

    t1, t2 = build_frequency_table(first), build_frequency_table(second)
    check("equal_frequency_tables", t1 == t2, f"{t1} vs {t2}")

    codes1 = assign_codes(build_huffman_tree(t1))
    codes2 = assign_codes(build_huffman_tree(t2))
    check("equal_codebooks", codes1 == codes2, f"{codes1} vs {codes2}")
    check("expected_codebook", codes1 == expected_codes, f"{codes1}, expected {expected_codes}")

    enc1 = huffman_encode(first, codes1)
    enc2 = huffman_encode(second, codes2)
    check("first_bitstream", enc1 == expected_bits[first], f"{enc1}, expected {expected_bits[first]}")
    check("second_bitstream", enc2 == expected_bits[second], f"{enc2}, expected {expected_bits[second]}")
    check("equal_encoded_length", len(enc1) == len(enc2) == 9, f"{len(enc1)} vs {len(enc2)} bits")
    check(
        "equal_bit_counts",
        sorted(enc1) == sorted(enc2) and enc1.count("1") == 5,
        f"1s/0s: {enc1.count('1')}/{enc1.count('0')} vs {enc2.count('1')}/{enc2.count('0')}",
    )
    h1 = shannon_entropy(build_frequency_table(enc1))
    h2 = shannon_entropy(build_frequency_table(enc2))
    check("equal_encoded_entropy", h1 == h2, f"{h1} vs {h2}")

    ea1 = assembly_index(enc1).index
    ea2 = assembly_index(enc2).index
    check(
        "encoded_index_ordering",
        ea1 < ea2,
        f"a({enc1}) = {ea1} vs a({enc2}) = {ea2}; the gap survives encoding",
    )
    check(
        "encoded_oracle_agreement",
        oracle_assembly_index(enc1) == ea1 and oracle_assembly_index(enc2) == ea2,
        "exhaustive oracle agrees on both encoded bitstreams",
    )
    return checks
