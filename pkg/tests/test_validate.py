import pytest

from coverinfer import minimal_cover_array, minimal_cover_array_oracle, validate
from coverinfer.validate import (
    FAST_REJECTORS,
    check_induced_values,
    check_minimality,
    check_offset_gap,
    round_trip,
    structural_check,
)

from conftest import in_range_arrays, valid_arrays
from tables import EX24_TEXT, EX13_MIN, EX13_TEXT, LENGTH8_TABLE


@pytest.mark.parametrize("c, pos", [([0, 2], 2), ([1], 1), ([0, 0, 3], 3)])
def test_structural_failures(c, pos):
    report = structural_check(c)
    assert not report.valid
    assert report.violated.predicate == "structural_check"
    assert report.violated.positions == (pos,)


def test_empty_array_is_not_a_cover_array():
    assert not validate([]).valid


@pytest.mark.parametrize("c", [row for row, _ in LENGTH8_TABLE])
def test_length8_table_rows_pass_every_check(c):
    assert structural_check(c) is None
    assert check_offset_gap(c) is None
    assert check_induced_values(c) is None
    assert check_minimality(c) is None


def test_24_symbol_array_passes():
    c = minimal_cover_array_oracle(EX24_TEXT)
    assert check_induced_values(c) is None
    assert check_offset_gap(c) is None
    assert validate(c).valid


def test_offset_gap_counterexample():
    # smallest in-range array outside the valid set that this check rejects
    c = (0, 0, 2, 2)
    assert c not in valid_arrays(4)
    report = check_offset_gap(c)
    assert report.violated.predicate == "check_offset_gap"
    assert report.violated.positions == (4, 3)


def test_fast_rejectors_accept_every_valid_array(valid_up_to_12):
    for c in valid_up_to_12:
        for check in FAST_REJECTORS:
            assert check(c) is None, (check.__name__, c)


def test_validate_13():
    report = validate(EX13_MIN)
    assert report.valid
    assert report.witness == EX13_TEXT
    assert report.line() == f"VALID {EX13_TEXT}"


def test_validate_rejects_unrealisable():
    report = validate([0, 0, 2])
    assert not report.valid
    assert report.witness is None
    assert not round_trip([0, 0, 2]).valid


def test_validate_length8_exactly_table():
    table = {tuple(c) for c, _ in LENGTH8_TABLE}
    accepted = {c for c in in_range_arrays(8) if validate(c).valid}
    assert accepted == table


def test_witness_reproduces_input(valid_up_to_12):
    for c in valid_up_to_12[::7]:
        report = validate(c)
        assert tuple(minimal_cover_array(report.witness)) == c


def test_rejectors_never_contradict_round_trip():
    for n in range(1, 8):
        for c in in_range_arrays(n):
            if structural_check(c):
                continue
            if any(check(c) for check in FAST_REJECTORS):
                assert not round_trip(c).valid, c
