import shutil
import subprocess

import pytest
from hypothesis import given, strategies as st

from keysplit.records import (
    EMPTY_LINE,
    MalformedReason,
    ParseMode,
    ParsedRecord,
    parse_record,
    render_record,
    RenderMode,
)

LINE_BYTES = st.binary(min_size=1, max_size=80).filter(lambda b: b"\n" not in b and b"\r" not in b)


def fields_of(line, mode, delimiter=b","):
    rec = parse_record(line, delimiter, mode, 1)
    assert isinstance(rec, ParsedRecord)
    return list(rec.fields)


def test_parse_keep_all_traffic_line():
    assert fields_of(b"7,New York,TRANSCOM,x", ParseMode.KEEP_ALL) == [
        b"7",
        b"New York",
        b"TRANSCOM",
        b"x",
    ]


def test_parse_legacy_drops_trailing_empties():
    # frozen from the reference split: a,b,c,,, -> a|b|c
    assert fields_of(b"a,b,c,,,", ParseMode.LEGACY) == [b"a", b"b", b"c"]


def test_parse_keep_all_keeps_trailing_empties():
    assert fields_of(b"a,b,c,,,", ParseMode.KEEP_ALL) == [b"a", b"b", b"c", b"", b"", b""]


def test_parse_empty_line_is_malformed():
    reason = parse_record(b"", b",", ParseMode.KEEP_ALL, 7)
    assert isinstance(reason, MalformedReason)
    assert reason.kind == EMPTY_LINE
    assert reason.line_number == 7


def test_parse_legacy_all_empty_collapses_to_single_empty_field():
    assert fields_of(b",,,", ParseMode.LEGACY) == [b""]
    assert fields_of(b",", ParseMode.LEGACY) == [b""]


def test_parse_legacy_keeps_leading_and_inner_empties():
    assert fields_of(b",a,", ParseMode.LEGACY) == [b"", b"a"]
    assert fields_of(b"a,,b,,", ParseMode.LEGACY) == [b"a", b"", b"b"]


def test_parse_rejects_multibyte_delimiter():
    with pytest.raises(ValueError):
        parse_record(b"a,b", b",,", ParseMode.LEGACY, 1)


def test_render_spaced_leading_space_and_joined_fields():
    rec = ParsedRecord((b"1", b"Pittsburgh", b"IDOT"), 1, b"1,Pittsburgh,IDOT")
    assert render_record(rec, RenderMode.SPACED) == b" 1 Pittsburgh IDOT\n"


def test_render_spaced_empty_field_doubles_the_space():
    rec = ParsedRecord((b"a", b"", b"b"), 1, b"a,,b")
    assert render_record(rec, RenderMode.SPACED) == b" a  b\n"


def test_render_passthrough_is_raw_plus_newline():
    rec = ParsedRecord((b"x", b"y", b"z"), 1, b"x,y,z")
    assert render_record(rec, RenderMode.PASSTHROUGH) == b"x,y,z\n"


def test_spaced_render_collides_on_fields_containing_spaces():
    # documented non-invertibility, not a bug: "a b" vs "a","b"
    joined = ParsedRecord((b"a b",), 1, b"a b")
    split = ParsedRecord((b"a", b"b"), 1, b"a,b")
    assert joined.fields != split.fields
    assert render_record(joined, RenderMode.SPACED) == render_record(split, RenderMode.SPACED)


@given(LINE_BYTES)
def test_legacy_equals_keep_all_minus_trailing_empty_run(line):
    keep = fields_of(line, ParseMode.KEEP_ALL)
    while keep and keep[-1] == b"":
        keep.pop()
    if not keep:
        keep = [b""]
    assert fields_of(line, ParseMode.LEGACY) == keep


@given(LINE_BYTES)
def test_keep_all_field_count_is_delimiter_count_plus_one(line):
    assert len(fields_of(line, ParseMode.KEEP_ALL)) == line.count(b",") + 1


@given(LINE_BYTES)
def test_keep_all_then_passthrough_roundtrips(line):
    rec = parse_record(line, b",", ParseMode.KEEP_ALL, 1)
    assert render_record(rec, RenderMode.PASSTHROUGH) == line + b"\n"


@given(LINE_BYTES, st.sampled_from([ParseMode.LEGACY, ParseMode.KEEP_ALL]))
def test_parse_is_total_over_nonempty_lines(line, mode):
    rec = parse_record(line, b",", mode, 1)
    assert isinstance(rec, ParsedRecord)
    assert rec.fields
    assert rec.raw == line


PERL = shutil.which("perl")


@pytest.mark.skipif(PERL is None, reason="perl not installed")
@pytest.mark.parametrize(
    "line",
    [b"a,b,c,,,", b",a,", b"a", b"a,,b,,", b",,x", b"x,y,z", b"1,,2,,3,", b",,,", b","],
)
def test_legacy_mode_matches_perl_split(line):
    script = 'print join("\\x00", split /,/, $ARGV[0]);'
    out = subprocess.run(
        [PERL, "-e", script, line.decode("ascii")], capture_output=True, check=True
    ).stdout
    expected = out.split(b"\x00") if out else [b""]
    assert fields_of(line, ParseMode.LEGACY) == expected
