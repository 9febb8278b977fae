import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from assemblage.core import EmptyObjectError
from assemblage.huffman import (
    HuffmanDecodeError,
    assign_codes,
    build_frequency_table,
    build_huffman_tree,
    huffman_decode,
    huffman_encode,
    pack_bits,
    unpack_bits,
)

texts = st.text(alphabet="zbcaq01", min_size=1, max_size=40)


def codes_for(s: str) -> dict[str, str]:
    return assign_codes(build_huffman_tree(build_frequency_table(s)))


def test_frequency_table_sorted_counts():
    assert build_frequency_table("zbzbzc") == {"b": 2, "c": 1, "z": 3}


def test_frequency_table_rejects_empty():
    with pytest.raises(EmptyObjectError):
        build_frequency_table("")


def test_reference_codebook():
    assert codes_for("zbzbzc") == {"z": "1", "b": "01", "c": "00"}
    assert codes_for("zzzbbc") == {"z": "1", "b": "01", "c": "00"}


def test_reference_bitstreams():
    codes = codes_for("zbzbzc")
    assert huffman_encode("zbzbzc", codes) == "101101100"
    assert huffman_encode("zzzbbc", codes) == "111010100"


def test_two_symbol_tie_rule():
    # equal counts: the lexicographically smaller symbol takes the 0 branch
    assert codes_for("ab") == {"a": "0", "b": "1"}
    assert codes_for("zb") == {"b": "0", "z": "1"}


def test_single_symbol_code():
    assert codes_for("zzzz") == {"z": "0"}
    tree = build_huffman_tree({"z": 4})
    assert huffman_decode("0000", tree) == "zzzz"
    with pytest.raises(HuffmanDecodeError):
        huffman_decode("01", tree)


def test_tree_rejects_bad_tables():
    with pytest.raises(ValueError):
        build_huffman_tree({})
    with pytest.raises(ValueError):
        build_huffman_tree({"zz": 1})
    with pytest.raises(ValueError):
        build_huffman_tree({"z": 0})


def test_encode_unknown_symbol():
    with pytest.raises(ValueError):
        huffman_encode("zq", {"z": "0"})


def test_decode_rejects_malformed():
    tree = build_huffman_tree(build_frequency_table("zbzbzc"))
    with pytest.raises(HuffmanDecodeError):
        huffman_decode("", tree)
    with pytest.raises(HuffmanDecodeError):
        huffman_decode("102", tree)
    with pytest.raises(HuffmanDecodeError):
        huffman_decode("0", tree)  # ends inside the 2-bit codes


def test_pack_unpack_known():
    assert pack_bits("101101100") == bytes([7, 0b10110110, 0b00000000])
    assert unpack_bits(pack_bits("101101100")) == "101101100"


def test_unpack_rejects_garbage():
    with pytest.raises(ValueError):
        unpack_bits(b"")
    with pytest.raises(ValueError):
        unpack_bits(bytes([9, 0]))
    with pytest.raises(ValueError):
        pack_bits("10x")


@settings(max_examples=150, deadline=None)
@given(texts)
def test_round_trip(s):
    tree = build_huffman_tree(build_frequency_table(s))
    codes = assign_codes(tree)
    assert huffman_decode(huffman_encode(s, codes), tree) == s


@settings(max_examples=150, deadline=None)
@given(texts)
def test_kraft_equality(s):
    codes = codes_for(s)
    kraft = sum(2.0 ** -len(code) for code in codes.values())
    if len(codes) >= 2:
        assert kraft == 1.0  # complete binary tree: exact equality
    else:
        assert kraft == 0.5  # lone symbol gets the incomplete code "0"


@settings(max_examples=150, deadline=None)
@given(texts)
def test_mean_code_length_below_entropy_plus_one(s):
    table = build_frequency_table(s)
    codes = codes_for(s)
    total = sum(table.values())
    mean_len = sum(table[sym] * len(codes[sym]) for sym in table) / total
    h = -sum(c / total * math.log2(c / total) for c in table.values())
    if len(table) >= 2:
        assert mean_len < h + 1
    else:
        assert mean_len == 1.0 and h == 0.0  # degenerate code hits H + 1 exactly


@settings(max_examples=100, deadline=None)
@given(texts)
def test_codes_are_prefix_free(s):
    codes = sorted(codes_for(s).values())
    for a, b in zip(codes, codes[1:]):
        assert not b.startswith(a) or a == b


@settings(max_examples=100, deadline=None)
@given(texts)
def test_pack_round_trip(s):
    codes = codes_for(s)
    bits = huffman_encode(s, codes)
    assert unpack_bits(pack_bits(bits)) == bits
