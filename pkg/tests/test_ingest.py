"""Frequency-table files and segmented corpora."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from menzerath import (
    CorpusFormat,
    Domain,
    EmptyConstituent,
    EmptyInput,
    InvalidPair,
    ParseError,
    build_table,
    parse_frequency_table,
    parse_segmented_corpus,
    write_frequency_table,
)

table_strategy = st.builds(
    lambda cells, boundaries: build_table(
        [
            ((x, x + dz, n) if not boundaries else (x - 1, dz, n))
            for (x, dz), n in cells.items()
        ],
        Domain.BOUNDARIES if boundaries else Domain.SEGMENTS,
    ),
    cells=st.dictionaries(
        keys=st.tuples(st.integers(1, 7), st.integers(0, 9)),
        values=st.integers(1, 99),
        min_size=1,
        max_size=12,
    ),
    boundaries=st.booleans(),
)


class TestParseFrequencyTable:
    def test_header_and_aggregation(self):
        t = parse_frequency_table("x,z,count\n2,5,10\n2,5,5\n")
        assert t.cells == {(2, 5): 15}
        assert t.domain is Domain.SEGMENTS

    def test_non_integer_field(self):
        with pytest.raises(ParseError) as err:
            parse_frequency_table("1,2,one\n")
        assert err.value.line_number == 1

    def test_invalid_pair_reports_line(self):
        with pytest.raises(InvalidPair, match="line 1"):
            parse_frequency_table("3,2,1\n")

    def test_tabs_comments_blank_lines_crlf(self):
        text = "# a comment\r\nx\tz\tcount\r\n\r\n2\t5\t4\r\n2\t6\t1\r\n"
        t = parse_frequency_table(text)
        assert t.cells == {(2, 5): 4, (2, 6): 1}

    def test_domain_directive(self):
        t = parse_frequency_table("#domain=boundaries\n0,0,7\n")
        assert t.domain is Domain.BOUNDARIES
        assert t.cells == {(0, 0): 7}

    def test_directive_after_data_rejected(self):
        with pytest.raises(ParseError, match="precede"):
            parse_frequency_table("1,2,3\n#domain=boundaries\n0,0,7\n")

    def test_wrong_field_count(self):
        with pytest.raises(ParseError, match="3 fields"):
            parse_frequency_table("1,2\n")

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            parse_frequency_table("# nothing\n\n")

    def test_count_of_zero_rejected(self):
        with pytest.raises(InvalidPair, match="line 2"):
            parse_frequency_table("1,2,3\n1,3,0\n")

    def test_accepts_iterable_of_lines(self):
        t = parse_frequency_table(iter(["x,z,count\n", "2,5,1\n"]))
        assert t.cells == {(2, 5): 1}

    @given(table_strategy)
    @settings(max_examples=80)
    def test_round_trip(self, table):
        text = write_frequency_table(table)
        back = parse_frequency_table(text)
        assert back.cells == table.cells
        assert back.domain is table.domain
        assert back.total == table.total
        # Canonical writes are idempotent.
        assert write_frequency_table(back) == text

    def test_order_insensitive(self):
        a = parse_frequency_table("1,2,3\n2,5,4\n1,4,1\n")
        b = parse_frequency_table("1,4,1\n1,2,3\n2,5,4\n")
        assert a.cells == b.cells


class TestWriteFrequencyTable:
    def test_canonical_format(self):
        t = build_table([(2, 5, 1), (1, 2, 3)], Domain.SEGMENTS)
        assert write_frequency_table(t) == "x,z,count\n1,2,3\n2,5,1\n"

    def test_boundary_directive_emitted(self):
        t = build_table([(0, 0, 2)], Domain.BOUNDARIES)
        assert write_frequency_table(t) == "#domain=boundaries\nx,z,count\n0,0,2\n"


class TestParseSegmentedCorpus:
    def test_chars_mode(self):
        t = parse_segmented_corpus("men-ze-rath\n")
        assert t.cells == {(3, 9): 1}

    def test_single_character_construct(self):
        t = parse_segmented_corpus("a\n")
        assert t.cells == {(1, 1): 1}

    def test_adjacent_delimiters(self):
        with pytest.raises(EmptyConstituent) as err:
            parse_segmented_corpus("ab--cd\n")
        assert err.value.line_number == 1

    def test_leading_delimiter(self):
        with pytest.raises(EmptyConstituent):
            parse_segmented_corpus("ok\n-ab\n")

    def test_counts_accumulate(self):
        t = parse_segmented_corpus("ab-cd\nab-cd\nxyz\n")
        assert t.cells == {(2, 4): 2, (1, 3): 1}

    def test_blank_lines_and_comments_skipped(self):
        t = parse_segmented_corpus("# corpus\n\nab\n\n")
        assert t.cells == {(1, 2): 1}

    def test_combining_diacritics_count_once(self):
        # 'a' + combining acute is one grapheme cluster.
        t = parse_segmented_corpus("pá-la\n")
        assert t.cells == {(2, 4): 1}

    def test_delimited_mode(self):
        fmt = CorpusFormat(subconstituent_delimiter=".")
        t = parse_segmented_corpus("m.en-z.e.r", fmt)
        assert t.cells == {(2, 5): 1}

    def test_delimited_mode_empty_unit(self):
        fmt = CorpusFormat(subconstituent_delimiter=".")
        with pytest.raises(EmptyConstituent):
            parse_segmented_corpus("a..b\n", fmt)

    def test_segment_invariant_always_holds(self):
        t = parse_segmented_corpus("a-b-c\nquite-long-words\nx\n")
        for x, z in t.cells:
            assert 1 <= x <= z

    def test_empty_corpus(self):
        with pytest.raises(EmptyInput):
            parse_segmented_corpus("# nothing here\n")

    def test_order_insensitive(self):
        a = parse_segmented_corpus("ab-c\nde\n")
        b = parse_segmented_corpus("de\nab-c\n")
        assert a.cells == b.cells


class TestCorpusFormat:
    def test_delimiters_must_differ(self):
        with pytest.raises(ValueError):
            CorpusFormat(constituent_delimiter="-", subconstituent_delimiter="-")

    def test_comment_prefix_collision(self):
        with pytest.raises(ValueError):
            CorpusFormat(constituent_delimiter="#")

    def test_single_character_only(self):
        with pytest.raises(ValueError):
            CorpusFormat(constituent_delimiter="--")
