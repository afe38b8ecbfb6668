"""Tests for key/value record rendering."""

import pytest

from polarity.utils.records import format_block, parse_block, render, render_many


def test_structured_block():
    text = format_block({"h": 2, "agree": True, "families": ["L", "B"], "wp_formula": None})
    assert text == "h = 2\nagree = yes\nfamilies = L, B\nwp_formula = -\n"


def test_parse_block_reads_format_block():
    fields = {"kind": "benzenoid", "hexagon.0": "terminal: 0 1 2 3 4 5"}
    assert parse_block(format_block(fields)) == fields


def test_parse_block_rejects_bare_line():
    with pytest.raises(ValueError, match="line 2"):
        parse_block("a = 1\nnot a record\n")


def test_text_layout_aligns_keys():
    text = render("C6", {"m1": 24, "wp_oracle": 3}, "text")
    assert text.splitlines() == ["C6", "  m1        : 24", "  wp_oracle : 3"]


def test_blocks_separated_by_blank_line():
    joined = render_many([format_block({"a": 1}), format_block({"b": 2})])
    assert joined == "a = 1\n\nb = 2\n"
