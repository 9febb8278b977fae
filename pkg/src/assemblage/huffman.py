"""Huffman coding with a fixed, reproducible tie rule.

The tree is built by repeatedly merging the two lowest-count nodes.  Ties
on count are broken by creation rank, most recent first, with the leaves
ranked in descending symbol order before any merge; the first node popped
in a merge becomes the left/0 child.  This makes trees and codebooks a
pure function of the frequency table: for counts {z: 3, b: 2, c: 1} it
yields exactly z -> "1", b -> "01", c -> "00".
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass

from .core import EmptyObjectError


class HuffmanDecodeError(ValueError):
    """Bit stream is not a valid concatenation of codes from the tree."""


def build_frequency_table(s: str) -> dict[str, int]:
    """Symbol -> occurrence count, keys in ascending symbol order."""
    if not s:
        raise EmptyObjectError("cannot tabulate an empty string")
    counts = Counter(s)
    return {sym: counts[sym] for sym in sorted(counts)}


@dataclass(frozen=True)
class HuffmanNode:
    count: int
    rank: int  # creation order; leaves first, then merges
    symbol: str | None = None
    left: HuffmanNode | None = None
    right: HuffmanNode | None = None

    @property
    def is_leaf(self) -> bool:
        return self.symbol is not None


def build_huffman_tree(table: dict[str, int]) -> HuffmanNode:
    if not table:
        raise ValueError("frequency table is empty")
    for sym, count in table.items():
        if len(sym) != 1:
            raise ValueError(f"symbols are single characters, got {sym!r}")
        if count < 1:
            raise ValueError(f"count for {sym!r} must be >= 1")
    # leaf ranks descend with symbol order so that equal-count leaves pop
    # in ascending symbol order (lowest rank value wins after negation)
    symbols = sorted(table)
    leaves = [
        HuffmanNode(table[sym], rank=len(symbols) - 1 - i, symbol=sym)
        for i, sym in enumerate(symbols)
    ]
    heap = [(node.count, -node.rank, node) for node in leaves]
    heapq.heapify(heap)
    next_rank = len(symbols)
    while len(heap) > 1:
        _, _, first = heapq.heappop(heap)  # becomes the left/0 child
        _, _, second = heapq.heappop(heap)
        parent = HuffmanNode(first.count + second.count, next_rank, left=first, right=second)
        heapq.heappush(heap, (parent.count, -parent.rank, parent))
        next_rank += 1
    return heap[0][2]


def assign_codes(tree: HuffmanNode) -> dict[str, str]:
    """Prefix-free symbol -> bitstring map; a lone symbol gets code "0"."""
    if tree.is_leaf:
        return {tree.symbol: "0"}
    codes: dict[str, str] = {}

    def walk(node: HuffmanNode, prefix: str) -> None:
        if node.is_leaf:
            codes[node.symbol] = prefix
        else:
            walk(node.left, prefix + "0")
            walk(node.right, prefix + "1")

    walk(tree, "")
    return codes


def huffman_encode(s: str, codes: dict[str, str]) -> str:
    """Concatenated per-symbol codes, as a string of '0'/'1'."""
    if not s:
        raise EmptyObjectError("cannot encode an empty string")
    try:
        return "".join(codes[c] for c in s)
    except KeyError as exc:
        raise ValueError(f"symbol {exc.args[0]!r} has no code") from None


def huffman_decode(bits: str, tree: HuffmanNode) -> str:
    if not bits:
        raise HuffmanDecodeError("empty bit stream")
    if any(b not in "01" for b in bits):
        raise HuffmanDecodeError("bit stream must consist of '0' and '1'")
    if tree.is_leaf:
        if "1" in bits:
            raise HuffmanDecodeError("single-symbol streams use code '0' only")
        return tree.symbol * len(bits)
    out: list[str] = []
    node = tree
    for b in bits:
        node = node.left if b == "0" else node.right
        if node is None:
            raise HuffmanDecodeError("bit stream leaves the tree")
        if node.is_leaf:
            out.append(node.symbol)
            node = tree
    if node is not tree:
        raise HuffmanDecodeError("bit stream ends inside a code")
    return "".join(out)


def pack_bits(bits: str) -> bytes:
    """Serialize bits MSB-first, zero-padded, with a 1-byte pad-length prefix."""
    if any(b not in "01" for b in bits):
        raise ValueError("bit string must consist of '0' and '1'")
    pad = (-len(bits)) % 8
    padded = bits + "0" * pad
    out = bytearray([pad])
    for i in range(0, len(padded), 8):
        out.append(int(padded[i : i + 8], 2))
    return bytes(out)


def unpack_bits(data: bytes) -> str:
    if not data:
        raise ValueError("missing pad-length prefix")
    pad = data[0]
    if pad > 7:
        raise ValueError(f"pad length {pad} out of range")
    bits = "".join(format(byte, "08b") for byte in data[1:])
    if pad and pad > len(bits):
        raise ValueError("pad length exceeds payload")
    return bits[: len(bits) - pad] if pad else bits
