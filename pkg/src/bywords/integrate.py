"""Row-wise join of external per-word analysis tables onto the word matrix.

External analyzers consume the wordlist (one word per segment) and emit a
delimited table with one row per word in the same order, so the join is
positional. Counts must agree exactly; otherwise nothing is written.
"""

from __future__ import annotations

import csv
import warnings
from collections.abc import Sequence
from dataclasses import dataclass

from ._util import atomic_writer
from .errors import BywordsWarning, JoinMismatchError, TableFormatError
from .matrix import MATRIX_HEADER, WordRecord

_DELIMITERS = {"tab": "\t", "comma": ","}


def _resolve_delimiter(delimiter: str) -> str:
    if delimiter in _DELIMITERS:
        return _DELIMITERS[delimiter]
    if delimiter in _DELIMITERS.values():
        return delimiter
    raise ValueError(f"delimiter must be 'tab' or 'comma', not {delimiter!r}")


@dataclass(frozen=True)
class ExternalTable:
    """Header plus rows of one identifier and the raw numeric strings.

    Values stay as the exact strings read from the file so the join emits
    them unmodified, with no re-rounding or reformatting.
    """

    headers: tuple[str, ...]
    rows: tuple[tuple[str, tuple[str, ...]], ...]

    @property
    def value_headers(self) -> tuple[str, ...]:
        return self.headers[1:]


def import_external(path, delimiter: str = "tab") -> ExternalTable:
    """Read a delimited analysis table.

    The first line is the header; the first column is the per-row
    identifier (conventionally ``Filename``) and every remaining column
    must hold numeric values. Ragged or non-numeric rows are errors naming
    the offending line.
    """
    sep = _resolve_delimiter(delimiter)
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.reader(f, delimiter=sep)
        header = next(reader, None)
        if not header:
            raise TableFormatError(f"{path}: missing header line")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise TableFormatError(
                    f"{path}: line {lineno}: expected {len(header)} fields,"
                    f" found {len(row)}"
                )
            identifier, values = row[0], row[1:]
            for column, value in zip(header[1:], values):
                try:
                    float(value)
                except ValueError:
                    raise TableFormatError(
                        f"{path}: line {lineno}: non-numeric value {value!r}"
                        f" in column {column!r}"
                    ) from None
            rows.append((identifier, tuple(values)))
    return ExternalTable(headers=tuple(header), rows=tuple(rows))


def join_rows(
    records: Sequence[WordRecord],
    table: ExternalTable,
    path,
    verify: bool = False,
) -> None:
    """Positionally join records with table rows into one comma-delimited file.

    The output header is the six matrix column names followed by the
    table's numeric headers; row i holds record i's fields followed by the
    table's row i values, passed through verbatim. A count mismatch raises
    before anything is written. With ``verify`` a warning reports
    identifiers that disagree with the word column.
    """
    if len(records) != len(table.rows):
        raise JoinMismatchError(
            f"cannot join: {len(records)} matrix records vs"
            f" {len(table.rows)} table rows"
        )
    if verify:
        mismatched = [
            i for i, (rec, (identifier, _)) in enumerate(zip(records, table.rows))
            if identifier != rec.word
        ]
        if mismatched:
            warnings.warn(
                f"{len(mismatched)} table identifier(s) disagree with the word"
                f" column (first at row {mismatched[0] + 1})",
                BywordsWarning,
                stacklevel=2,
            )
    with atomic_writer(path) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(MATRIX_HEADER + table.value_headers)
        for record, (_, values) in zip(records, table.rows):
            writer.writerow(
                [record.canto, record.line, record.word, record.charnum,
                 record.speech, record.eos]
                + list(values)
            )
