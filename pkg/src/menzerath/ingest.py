"""Reading and writing joint frequency tables.

Two input carriers exist: delimited frequency-table files (rows of
``x, z, count``) and segmented text corpora (one construct per line,
constituents split by a delimiter).  Segmentation itself is the user's
input; no syllabification or morphological analysis happens here.
"""

from dataclasses import dataclass

import regex

from .errors import EmptyConstituent, EmptyInput, InvalidPair, ParseError
from .table import Domain, JointFrequencyTable

__all__ = [
    "CorpusFormat",
    "parse_frequency_table",
    "write_frequency_table",
    "parse_segmented_corpus",
]

COMMENT_PREFIX = "#"
_DOMAIN_DIRECTIVES = {
    "#domain=segments": Domain.SEGMENTS,
    "#domain=boundaries": Domain.BOUNDARIES,
}
# Extended grapheme clusters, so combining diacritics common in phonetic
# transcription count as one subconstituent, not two.
_GRAPHEME = regex.compile(r"\X")


@dataclass(frozen=True)
class CorpusFormat:
    """How segmented corpus lines are split into units.

    ``constituent_delimiter`` separates constituents within a construct.
    ``subconstituent_delimiter`` of ``None`` selects character mode
    (every grapheme cluster is one subconstituent); a character selects
    delimited mode (subconstituents are explicitly marked, e.g. ``.``).
    """

    constituent_delimiter: str = "-"
    subconstituent_delimiter: str | None = None

    def __post_init__(self):
        delims = [self.constituent_delimiter]
        if self.subconstituent_delimiter is not None:
            delims.append(self.subconstituent_delimiter)
        for d in delims:
            if len(d) != 1:
                raise ValueError(f"delimiter must be a single character, got {d!r}")
        if len(set(delims)) != len(delims) or COMMENT_PREFIX in delims:
            raise ValueError("delimiters must be distinct from each other and from '#'")


def _iter_lines(stream):
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = (line.rstrip("\r\n") for line in stream)
    for number, line in enumerate(lines, start=1):
        yield number, line.rstrip("\r")


def parse_frequency_table(stream) -> JointFrequencyTable:
    """Parse ``x, z, count`` rows (comma or tab separated) into a table.

    Accepts a string or an iterable of lines.  An optional header row
    ``x,z,count`` is skipped, ``#`` lines are comments, and a
    ``#domain=boundaries`` directive before the data switches the
    domain (segments is the default).  Rows with equal (x, z) are
    aggregated.  Raises :class:`ParseError` with the 1-based line
    number on malformed rows, :class:`InvalidPair` on domain
    violations, and :class:`EmptyInput` when no data rows are present.
    """
    domain = Domain.SEGMENTS
    rows: list[tuple[int, int, int]] = []
    saw_data = False
    for number, line in _iter_lines(stream):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith(COMMENT_PREFIX):
            directive = stripped.replace(" ", "").lower()
            if directive in _DOMAIN_DIRECTIVES:
                if saw_data:
                    raise ParseError(number, line, "domain directive must precede data")
                domain = _DOMAIN_DIRECTIVES[directive]
            continue
        fields = stripped.split("\t" if "\t" in stripped else ",")
        fields = [f.strip() for f in fields]
        if not saw_data and [f.lower() for f in fields] == ["x", "z", "count"]:
            continue
        if len(fields) != 3:
            raise ParseError(number, line, f"expected 3 fields, got {len(fields)}")
        try:
            x, z, count = (int(f) for f in fields)
        except ValueError:
            raise ParseError(number, line, "fields must be integers") from None
        try:
            JointFrequencyTable.from_pairs([(x, z, count)], domain)
        except InvalidPair as exc:
            raise InvalidPair(f"line {number}: {exc}") from None
        rows.append((x, z, count))
        saw_data = True
    if not rows:
        raise EmptyInput("no data rows in input")
    return JointFrequencyTable.from_pairs(rows, domain)


def write_frequency_table(table: JointFrequencyTable) -> str:
    """Canonical CSV: header, ascending (x, z), newline terminated.

    Boundary-domain tables carry the ``#domain=boundaries`` directive,
    so :func:`parse_frequency_table` round-trips every table exactly.
    """
    lines = []
    if table.domain is Domain.BOUNDARIES:
        lines.append("#domain=boundaries")
    lines.append("x,z,count")
    for x, z, n in table.sorted_cells():
        lines.append(f"{x},{z},{n}")
    return "\n".join(lines) + "\n"


def _count_subconstituents(
    constituent: str, fmt: CorpusFormat, number: int, line: str
) -> int:
    if fmt.subconstituent_delimiter is None:
        return len(_GRAPHEME.findall(constituent))
    parts = constituent.split(fmt.subconstituent_delimiter)
    if any(not p for p in parts):
        raise EmptyConstituent(number, line)
    return len(parts)


def parse_segmented_corpus(
    stream, fmt: CorpusFormat = CorpusFormat()
) -> JointFrequencyTable:
    """Count constituents and subconstituents of one construct per line.

    For every line: x is the number of delimiter-separated
    constituents, z the total number of subconstituents across them.
    Blank lines and ``#`` comments are skipped.  Adjacent, leading or
    trailing delimiters make an empty unit and raise
    :class:`EmptyConstituent` with the line number.
    """
    counts: dict[tuple[int, int], int] = {}
    for number, line in _iter_lines(stream):
        stripped = line.strip()
        if not stripped or stripped.startswith(COMMENT_PREFIX):
            continue
        constituents = stripped.split(fmt.constituent_delimiter)
        if any(not c for c in constituents):
            raise EmptyConstituent(number, line)
        x = len(constituents)
        z = sum(
            _count_subconstituents(c, fmt, number, line) for c in constituents
        )
        counts[(x, z)] = counts.get((x, z), 0) + 1
    if not counts:
        raise EmptyInput("no construct lines in input")
    return JointFrequencyTable(
        Domain.SEGMENTS, counts, total=sum(counts.values())
    )
