"""Shannon entropy of a frequency table, in bits per symbol."""

from __future__ import annotations

import math


def shannon_entropy(table: dict[str, int]) -> float:
    """H = -sum p(x) log2 p(x) with p(x) = count(x) / total."""
    if not table:
        raise ValueError("frequency table is empty")
    total = sum(table.values())
    if any(c < 1 for c in table.values()):
        raise ValueError("all counts must be >= 1")
    h = 0.0
    for count in table.values():
        p = count / total
        h -= p * math.log2(p)
    return max(h, 0.0)  # clamp the -0.0 of single-symbol tables
