import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from assemblage.entropy import shannon_entropy
from assemblage.huffman import build_frequency_table


def test_single_symbol_is_zero():
    assert shannon_entropy({"z": 7}) == 0.0
    assert math.copysign(1.0, shannon_entropy({"z": 7})) == 1.0  # not -0.0


def test_uniform_two_symbols():
    assert shannon_entropy({"a": 5, "b": 5}) == pytest.approx(1.0, abs=1e-12)


def test_reference_value():
    # counts 3, 2, 1 over six symbols
    table = build_frequency_table("zbzbzc")
    expected = -(3 / 6) * math.log2(3 / 6) - (2 / 6) * math.log2(2 / 6) - (1 / 6) * math.log2(1 / 6)
    assert shannon_entropy(table) == pytest.approx(expected, abs=1e-12)


def test_permutation_invariant():
    assert shannon_entropy(build_frequency_table("zbzbzc")) == shannon_entropy(
        build_frequency_table("zzzbbc")
    )


def test_rejects_bad_tables():
    with pytest.raises(ValueError):
        shannon_entropy({})
    with pytest.raises(ValueError):
        shannon_entropy({"z": 0})


@settings(max_examples=150, deadline=None)
@given(st.dictionaries(st.characters(min_codepoint=97, max_codepoint=122),
                       st.integers(min_value=1, max_value=100), min_size=1, max_size=8))
def test_entropy_bounds(table):
    h = shannon_entropy(table)
    assert 0.0 <= h <= math.log2(len(table)) + 1e-12


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=16), st.integers(min_value=1, max_value=50))
def test_uniform_is_maximal(k, count):
    table = {chr(ord("a") + i): count for i in range(k)}
    assert shannon_entropy(table) == pytest.approx(math.log2(k), abs=1e-12)
