"""Reference publication year spectroscopy over citation records.

Standard RPYS tallies cited references per referenced year and reports each
year's deviation from the median of the 5-year window centred on it
(truncated at the range edges).  Multi RPYS repeats the analysis per citing
year and rank-normalizes each row to [0, 1] so rows of different sizes can
share one heat map.
"""

from __future__ import annotations

import csv
import io
import statistics
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

YEAR_MIN = 1800
YEAR_MAX = 2100

MEDIAN_WINDOW = 2  # years on each side of the centre


@dataclass(frozen=True)
class CitationRecord:
    """One citing publication's year and the years of its cited references."""

    citing_year: int
    cited_years: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cited_years", tuple(self.cited_years))
        for year in (self.citing_year, *self.cited_years):
            if not YEAR_MIN <= year <= YEAR_MAX:
                raise ValueError(f"year {year} outside sane range [{YEAR_MIN}, {YEAR_MAX}]")


@dataclass(frozen=True)
class Spectrogram:
    years: tuple[int, ...]
    counts: tuple[int, ...]
    deviations: tuple[float, ...]

    def count(self, year: int) -> int:
        return self.counts[self.years.index(year)]

    def deviation(self, year: int) -> float:
        return self.deviations[self.years.index(year)]


@dataclass(frozen=True)
class MultiRpysGrid:
    citing_years: tuple[int, ...]
    referenced_years: tuple[int, ...]
    values: tuple[tuple[float, ...], ...]  # one row per citing year, in [0, 1]
    empty_rows: frozenset[int] = frozenset()  # citing years with no records

    def row(self, citing_year: int) -> tuple[float, ...]:
        return self.values[self.citing_years.index(citing_year)]


def median_deviations(counts: Sequence[int]) -> tuple[float, ...]:
    """Deviation of each count from its windowed median (window truncated)."""
    out = []
    for i, c in enumerate(counts):
        window = counts[max(0, i - MEDIAN_WINDOW) : i + MEDIAN_WINDOW + 1]
        out.append(c - statistics.median(window))
    return tuple(out)


def rpys(
    records: Iterable[CitationRecord],
    year_range: Optional[tuple[int, int]] = None,
) -> Spectrogram:
    """Standard RPYS spectrogram over a citation corpus.

    Records with no cited references are skipped.  The year axis is
    contiguous over ``year_range`` (default: min..max cited year seen).
    """
    tally: Counter[int] = Counter()
    for record in records:
        tally.update(record.cited_years)
    if not tally:
        raise ValueError("no cited references to analyze")
    if year_range is not None:
        lo, hi = year_range
        if lo > hi:
            raise ValueError("year_range must be (low, high)")
    else:
        lo, hi = min(tally), max(tally)

    years = tuple(range(lo, hi + 1))
    counts = tuple(tally.get(y, 0) for y in years)
    return Spectrogram(years, counts, median_deviations(counts))


def rank_transform(values: Sequence[float]) -> tuple[float, ...]:
    """Minimum-rank-for-ties transform, scaled by the row length to [0, 1]."""
    n = len(values)
    if n == 0:
        return ()
    sorted_values = sorted(values)
    # min rank = 1 + number of strictly smaller values
    return tuple((sorted_values.index(v) + 1) / n for v in values)


def multi_rpys(
    records: Iterable[CitationRecord],
    citing_range: tuple[int, int],
    referenced_range: tuple[int, int],
) -> MultiRpysGrid:
    """Per-citing-year RPYS, rank-normalized row by row.

    Citing years with no records produce an all-zero row and are flagged in
    ``empty_rows``.
    """
    c_lo, c_hi = citing_range
    r_lo, r_hi = referenced_range
    if c_lo > c_hi or r_lo > r_hi:
        raise ValueError("ranges must be (low, high)")

    segments: dict[int, list[CitationRecord]] = {y: [] for y in range(c_lo, c_hi + 1)}
    for record in records:
        if c_lo <= record.citing_year <= c_hi:
            segments[record.citing_year].append(record)

    referenced_years = tuple(range(r_lo, r_hi + 1))
    rows = []
    empty = set()
    for citing_year in range(c_lo, c_hi + 1):
        segment = segments[citing_year]
        if not any(record.cited_years for record in segment):
            empty.add(citing_year)
            rows.append((0.0,) * len(referenced_years))
            continue
        spectrum = rpys(segment, year_range=(r_lo, r_hi))
        rows.append(rank_transform(spectrum.deviations))
    return MultiRpysGrid(
        citing_years=tuple(range(c_lo, c_hi + 1)),
        referenced_years=referenced_years,
        values=tuple(rows),
        empty_rows=frozenset(empty),
    )


def term_frequency(
    keyword_lists: Iterable[Iterable[str]],
    top_n: int,
) -> list[tuple[str, int]]:
    """Case-folded exact-match keyword counts, most frequent first.

    Each input collection counts a keyword at most once; ties break
    alphabetically.
    """
    if top_n < 1:
        raise ValueError("top_n must be at least 1")
    tally: Counter[str] = Counter()
    for keywords in keyword_lists:
        tally.update({k.casefold() for k in keywords})
    ordered = sorted(tally.items(), key=lambda item: (-item[1], item[0]))
    return ordered[:top_n]


def load_citations_csv(text: str) -> list[CitationRecord]:
    """Read ``citing_year, cited_year`` pairs, grouped into one record per
    citing year.  A single header row is tolerated."""
    pairs: dict[int, list[int]] = {}
    reader = csv.reader(io.StringIO(text))
    for i, row in enumerate(reader):
        cells = [c.strip() for c in row if c.strip()]
        if not cells:
            continue
        if len(cells) != 2:
            raise ValueError(f"line {i + 1}: expected 'citing_year, cited_year', got {row!r}")
        try:
            citing, cited = int(cells[0]), int(cells[1])
        except ValueError:
            if i == 0:  # header row
                continue
            raise ValueError(f"line {i + 1}: years must be integers, got {row!r}") from None
        pairs.setdefault(citing, []).append(cited)
    return [CitationRecord(citing, tuple(sorted(cited))) for citing, cited in sorted(pairs.items())]
