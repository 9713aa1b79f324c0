import io

import pytest

from coverinfer.formats import FormatError, format_array, parse_array, read_arrays, read_text


def test_read_text_skips_comments():
    assert read_text(io.StringIO("# 13 symbols\naabbbbaabbbbb\n")) == "aabbbbaabbbbb"
    assert read_text(io.StringIO("abab")) == "abab"
    assert read_text(io.StringIO("# nothing\n")) == ""


@pytest.mark.parametrize("content", ["ab\nba\n", "aBc\n", "ab1\n"])
def test_read_text_rejects(content):
    with pytest.raises(FormatError):
        read_text(io.StringIO(content))


def test_read_arrays():
    stream = io.StringIO("# two arrays\n0 1 0\n\n0 0 0 2\n")
    assert read_arrays(stream) == [[0, 1, 0], [0, 0, 0, 2]]


@pytest.mark.parametrize("line", ["0 x 1", "0 -1", "0,1"])
def test_parse_array_rejects(line):
    with pytest.raises(FormatError):
        parse_array(line)


def test_format_round_trip():
    values = [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0]
    assert format_array(values) == "0 1 0 0 0 0 0 0 0 0 0 6 0"
    assert parse_array(format_array(values)) == values
