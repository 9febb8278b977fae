import math

import pytest

from assemblage.ensemble import (
    Ensemble,
    EnsembleFormatError,
    InexactIndexError,
    assembly_A,
    ensemble_terms,
    parse_ensemble,
)


def test_all_singletons_give_zero():
    assert assembly_A(Ensemble((("zbzbzc", 1),))) == 0.0
    assert assembly_A(Ensemble((("zb", 1), ("zc", 1)))) == 0.0


def test_worked_examples():
    assert assembly_A(Ensemble((("zz", 2),))) == pytest.approx(
        math.exp(1) * 1 / 2, rel=1e-9
    )
    assert assembly_A(Ensemble((("zbzbzc", 3), ("z", 1)))) == pytest.approx(
        math.exp(4) * 2 / 4, rel=1e-9
    )
    assert assembly_A(Ensemble((("zz", 2),))) == pytest.approx(1.35914, abs=5e-6)
    assert assembly_A(Ensemble((("zbzbzc", 3), ("z", 1)))) == pytest.approx(27.29908, abs=5e-6)


def test_monotone_in_copies_and_index():
    single = [assembly_A(Ensemble((("zbzbzc", n),))) for n in range(1, 6)]
    assert all(a < b for a, b in zip(single, single[1:]))
    # same copy number, growing index
    by_index = [assembly_A(Ensemble(((s, 2),))) for s in ("zz", "zzzz", "zbzbzc", "zzzbbc")]
    assert all(a < b for a, b in zip(by_index, by_index[1:]))


def test_terms_breakdown():
    rows = ensemble_terms(Ensemble((("zbzbzc", 3), ("z", 1))))
    assert rows[0] == ("zbzbzc", 3, 4, pytest.approx(math.exp(4) * 2 / 4))
    assert rows[1] == ("z", 1, 0, 0.0)


def test_total_count_includes_singletons():
    ens = Ensemble((("zbzbzc", 3), ("z", 1)))
    assert ens.total_count == 4


def test_validation():
    with pytest.raises(ValueError):
        Ensemble(())
    with pytest.raises(ValueError):
        Ensemble((("", 1),))
    with pytest.raises(ValueError):
        Ensemble((("z", 0),))
    with pytest.raises(ValueError):
        Ensemble((("z", 1), ("z", 2)))


def test_inexact_index_guard():
    long = "abcdefghij" * 3
    with pytest.raises(InexactIndexError):
        assembly_A(Ensemble(((long, 2),)))


def test_parse_csv():
    ens = parse_ensemble("object,copies\nzbzbzc,3\nz,1\n")
    assert ens.entries == (("zbzbzc", 3), ("z", 1))


def test_parse_csv_errors_carry_line_numbers():
    with pytest.raises(EnsembleFormatError, match="line 1"):
        parse_ensemble("thing,count\nz,1\n")
    with pytest.raises(EnsembleFormatError, match="line 3"):
        parse_ensemble("object,copies\nz,1\nb,-2\n")
    with pytest.raises(EnsembleFormatError, match="line 2"):
        parse_ensemble("object,copies\nonly-one-column\n")


def test_parse_json():
    ens = parse_ensemble('[{"object": "zz", "copies": 2}]')
    assert ens.entries == (("zz", 2),)


def test_parse_json_errors():
    with pytest.raises(EnsembleFormatError):
        parse_ensemble("[{bad json")
    with pytest.raises(EnsembleFormatError, match="entry 1"):
        parse_ensemble('[{"object": "zz", "copies": "2"}]')
    with pytest.raises(EnsembleFormatError, match="entry 1"):
        parse_ensemble('[{"object": "zz", "copies": true}]')
    with pytest.raises(EnsembleFormatError):
        parse_ensemble('[{"object": "zz", "copies": 2}, {"object": "zz", "copies": 1}]')
