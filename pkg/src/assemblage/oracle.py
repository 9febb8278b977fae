"""Brute-force reference computation of the assembly index.

Breadth-first exhaustive expansion over sets of constructed products: a
state is the set of strings built so far (basic symbols are implicit), and
every pair-join whose product is a substring of the target spawns a child
state.  The first level at which the target becomes constructible gives
the minimal join count.  Exponential, so the input length is capped; this
module deliberately shares no search machinery with :mod:`assemblage.core`
so the two can check each other.
"""

from __future__ import annotations

from .core import EmptyObjectError

ORACLE_MAX_LENGTH = 16


class OracleBudgetError(ValueError):
    """Input is too long for exhaustive enumeration."""


def oracle_assembly_index(s: str) -> int:
    if not isinstance(s, str):
        raise TypeError(f"expected str, got {type(s).__name__}")
    if not s:
        raise EmptyObjectError("assembly objects must be non-empty")
    n = len(s)
    if n > ORACLE_MAX_LENGTH:
        raise OracleBudgetError(f"oracle handles length <= {ORACLE_MAX_LENGTH}, got {n}")
    if n == 1:
        return 0

    # a state is the bitmask of products built so far; basic symbols are
    # implicit and live in basic_mask
    subs = sorted({s[i:j] for i in range(n) for j in range(i + 1, n + 1)})
    index_of = {t: i for i, t in enumerate(subs)}
    target = index_of[s]
    basic_mask = 0
    for c in set(s):
        basic_mask |= 1 << index_of[c]
    concat: dict[int, int] = {}  # (x * nids + y) -> product id
    nids = len(subs)
    target_splits: list[tuple[int, int]] = []
    for t in subs:
        for k in range(1, len(t)):
            x, y = index_of[t[:k]], index_of[t[k:]]
            concat[x * nids + y] = index_of[t]
            if t == s:
                target_splits.append((x, y))

    frontier = [0]
    visited = {0}
    depth = 0
    while frontier:
        for state in frontier:
            have = basic_mask | state
            if any((have >> a) & 1 and (have >> b) & 1 for a, b in target_splits):
                return depth + 1
        depth += 1
        nxt: list[int] = []
        for state in frontier:
            have = basic_mask | state
            ids = []
            m = have
            while m:
                i = m.bit_length() - 1
                m ^= 1 << i
                ids.append(i)
            for x in ids:
                row = x * nids
                for y in ids:
                    c = concat.get(row + y)
                    if c is not None and c != target and not (have >> c) & 1:
                        child = state | (1 << c)
                        if child not in visited:
                            visited.add(child)
                            nxt.append(child)
        frontier = nxt
    raise RuntimeError("unreachable: every non-empty string is constructible")
