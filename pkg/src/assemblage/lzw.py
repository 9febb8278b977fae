"""Lempel-Ziv-Welch compression with explicit size accounting.

The dictionary is seeded with the distinct symbols of the input in
ascending order (not a full byte alphabet), grows without a cap, and the
stream records enough to decompress: the code sequence plus the initial
alphabet.  Two size metrics are exposed: the raw code count and the byte
size under fixed-width minimal packing, ceil(code_count * bit_width / 8)
with bit_width = ceil(log2(final_dict_size)), at least 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import EmptyObjectError


class LzwDecodeError(ValueError):
    """Code sequence is malformed or inconsistent with its alphabet."""


@dataclass(frozen=True)
class CompressedStream:
    codes: tuple[int, ...]
    alphabet: tuple[str, ...]  # initial dictionary, ascending symbol order
    final_dict_size: int

    @property
    def code_count(self) -> int:
        return len(self.codes)

    @property
    def bit_width(self) -> int:
        return max(1, math.ceil(math.log2(self.final_dict_size)))

    @property
    def byte_size(self) -> int:
        return math.ceil(self.code_count * self.bit_width / 8)


def lzw_compress(s: str) -> CompressedStream:
    """Greedy longest-match LZW; the residual string is emitted last."""
    if not s:
        raise EmptyObjectError("cannot compress an empty string")
    alphabet = tuple(sorted(set(s)))
    table: dict[str, int] = {sym: i for i, sym in enumerate(alphabet)}
    codes: list[int] = []
    current = s[0]
    for ch in s[1:]:
        extended = current + ch
        if extended in table:
            current = extended
        else:
            codes.append(table[current])
            table[extended] = len(table)
            current = ch
    codes.append(table[current])
    return CompressedStream(tuple(codes), alphabet, len(table))


def lzw_decompress(stream: CompressedStream) -> str:
    """Inverse of lzw_compress, including the self-referential code case."""
    if not stream.codes:
        raise LzwDecodeError("empty code sequence")
    if not stream.alphabet:
        raise LzwDecodeError("stream carries no alphabet")
    entries: list[str] = list(stream.alphabet)
    first = stream.codes[0]
    if not 0 <= first < len(entries):
        raise LzwDecodeError(f"initial code {first} out of range")
    out = [entries[first]]
    prev = entries[first]
    for code in stream.codes[1:]:
        if 0 <= code < len(entries):
            current = entries[code]
        elif code == len(entries):
            current = prev + prev[0]  # entry about to be defined by this step
        else:
            raise LzwDecodeError(f"code {code} out of range (dict size {len(entries)})")
        out.append(current)
        entries.append(prev + current[0])
        prev = current
    return "".join(out)


def lzw_longest_reachable(n: int) -> int:
    """Longest single-symbol string compressible to n codes: n(n+1)/2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return n * (n + 1) // 2
