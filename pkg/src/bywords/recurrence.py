"""Categorical recurrence plots and recurrence quantification metrics over
any matrix column.

Two positions recur when their column values match exactly. The main
diagonal (every position matches itself) is stored with the plot but
excluded from the recurrence-rate and determinism denominators, following
the usual convention. Diagonal-line statistics come from a compiled kernel
when the extension is built, with a pure-Python fallback selected at
import time.
"""

from __future__ import annotations

import csv
from collections.abc import Hashable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from ._kernels import diag_line_histogram
from ._util import atomic_writer
from .errors import TableFormatError
from .matrix import strip_word

DEFAULT_LMIN = 2
METRIC_FIELDS = ("column", "n", "lmin", "rr", "det", "maxline", "meanline")


@dataclass(frozen=True)
class RecurrencePlot:
    """Recurrence structure of one value sequence.

    The sequence is stored as integer codes, one per distinct value in
    first-appearance order; the point set and all metrics derive from the
    codes on demand, so the plot itself stays O(n) in memory.
    """

    n: int
    key: str
    codes: tuple[int, ...]

    @cached_property
    def _positions(self) -> dict[int, list[int]]:
        positions: dict[int, list[int]] = {}
        for i, code in enumerate(self.codes):
            positions.setdefault(code, []).append(i)
        return positions

    @cached_property
    def points(self) -> frozenset[tuple[int, int]]:
        """All recurrent (i, j) pairs, 1-based, main diagonal included."""
        pts = set()
        for indices in self._positions.values():
            for i in indices:
                for j in indices:
                    pts.add((i + 1, j + 1))
        return frozenset(pts)

    def iter_offdiagonal(self) -> Iterator[tuple[int, int]]:
        """Off-diagonal recurrent pairs in row-major order."""
        for i, code in enumerate(self.codes):
            for j in self._positions[code]:
                if j != i:
                    yield (i + 1, j + 1)

    def recurrent(self, i: int, j: int) -> bool:
        """Whether 1-based positions i and j hold matching values."""
        return self.codes[i - 1] == self.codes[j - 1]


@dataclass(frozen=True)
class RqaMetrics:
    """Diagonal-line metrics of one recurrence plot.

    rr is the share of off-diagonal cells that recur; det the share of
    off-diagonal recurrent points lying on diagonal lines of length >= lmin;
    maxline and meanline the longest and mean such line length (0 when no
    line reaches lmin).
    """

    rr: float
    det: float
    maxline: int
    meanline: float


def recurrence_matrix(values: Sequence[Hashable], key: str = "values") -> RecurrencePlot:
    """Build the categorical recurrence plot of a value sequence."""
    seq = list(values)
    if not seq:
        raise ValueError("cannot build a recurrence plot from an empty sequence")
    index: dict[Hashable, int] = {}
    codes = tuple(index.setdefault(v, len(index)) for v in seq)
    return RecurrencePlot(n=len(seq), key=key, codes=codes)


def rqa(plot: RecurrencePlot, lmin: int = DEFAULT_LMIN) -> RqaMetrics:
    """Compute rr, det, maxline, and meanline for a plot.

    Lines shorter than ``lmin`` do not count as deterministic structure.
    The scan covers the upper triangle; symmetry supplies the lower one, so
    the ratios are unchanged.
    """
    if lmin < 2:
        raise ValueError(f"lmin must be at least 2, not {lmin}")
    points, hist = diag_line_histogram(plot.codes)
    n = plot.n
    offdiag_cells = n * n - n
    rr = (2 * points) / offdiag_cells if offdiag_cells else 0.0
    lengths = range(lmin, len(hist))
    det_points = sum(length * hist[length] for length in lengths)
    line_count = sum(hist[length] for length in lengths)
    det = det_points / points if points else 0.0
    maxline = max((length for length in lengths if hist[length]), default=0)
    meanline = det_points / line_count if line_count else 0.0
    return RqaMetrics(rr=rr, det=det, maxline=maxline, meanline=meanline)


def export_plot(plot: RecurrencePlot, path) -> None:
    """Write the sparse off-diagonal coordinate list, header ``i,j``,
    row-major, 1-based."""
    with atomic_writer(path) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["i", "j"])
        for i, j in plot.iter_offdiagonal():
            writer.writerow([i, j])


def write_metrics(plot: RecurrencePlot, metrics: RqaMetrics, lmin: int, path) -> None:
    """Write the one-row delimited metrics summary."""
    with atomic_writer(path) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(METRIC_FIELDS)
        writer.writerow(
            [plot.key, plot.n, lmin, metrics.rr, metrics.det,
             metrics.maxline, metrics.meanline]
        )


def column_values(path, column: str, delimiter: str = ",") -> list[str]:
    """Pull one column out of a delimited file with a header row.

    The ``word`` column is normalized (quotes and trailing terminal
    punctuation stripped, lowercased) so that forms like ``won!`` and
    ``won`` recur together; every other column is compared verbatim.
    """
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.reader(f, delimiter=delimiter)
        header = next(reader, None)
        if header is None:
            raise TableFormatError(f"{path}: missing header line")
        if column not in header:
            raise TableFormatError(
                f"{path}: no column {column!r} (available: {', '.join(header)})"
            )
        idx = header.index(column)
        values = []
        for lineno, row in enumerate(reader, start=2):
            if idx >= len(row):
                raise TableFormatError(
                    f"{path}: line {lineno}: missing field for column {column!r}"
                )
            values.append(row[idx])
    if column == "word":
        values = [strip_word(v).lower() for v in values]
    return values
