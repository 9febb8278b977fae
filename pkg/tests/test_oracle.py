import itertools
import random

import pytest

from assemblage.core import EmptyObjectError, assembly_index
from assemblage.oracle import ORACLE_MAX_LENGTH, OracleBudgetError, oracle_assembly_index


def min_addition_chain_length(m: int) -> int:
    """Shortest addition chain for m, by iterative-deepening DFS.

    Independent of both the search and the oracle: single-symbol strings
    reduce to addition chains, so this cross-checks them on that family.
    """
    if m == 1:
        return 0

    def extend(chain: list[int], depth: int) -> bool:
        last = chain[-1]
        if last == m:
            return True
        if depth == 0 or last << depth < m:
            return False
        sums = {a + b for a, b in itertools.combinations_with_replacement(chain, 2)}
        for nxt in sorted(sums, reverse=True):
            if last < nxt <= m:
                chain.append(nxt)
                if extend(chain, depth - 1):
                    return True
                chain.pop()
        return False

    depth = 1
    while not extend([1], depth):
        depth += 1
    return depth


@pytest.mark.parametrize(
    "s,expected",
    [("z", 0), ("zz", 1), ("zb", 1), ("zzzz", 2), ("zbzbzc", 4), ("zzzbbc", 5)],
)
def test_known_values(s, expected):
    assert oracle_assembly_index(s) == expected


def test_rejects_empty():
    with pytest.raises(EmptyObjectError):
        oracle_assembly_index("")


def test_budget_guard():
    with pytest.raises(OracleBudgetError):
        oracle_assembly_index("z" * (ORACLE_MAX_LENGTH + 1))


def test_matches_search_exhaustively_to_length_six():
    for n in range(1, 7):
        for tup in itertools.product("zb", repeat=n):
            s = "".join(tup)
            assert oracle_assembly_index(s) == assembly_index(s).index, s


def test_matches_search_on_random_strings():
    rng = random.Random(20260823)
    for _ in range(40):
        n = rng.randint(1, 10)
        s = "".join(rng.choice("zbc") for _ in range(n))
        assert oracle_assembly_index(s) == assembly_index(s).index, s


def test_single_symbol_reduces_to_addition_chains():
    for m in range(1, 33):
        expected = min_addition_chain_length(m)
        assert assembly_index("z" * m, length_cap=32).index == expected, m
        if m <= ORACLE_MAX_LENGTH:
            assert oracle_assembly_index("z" * m) == expected, m
