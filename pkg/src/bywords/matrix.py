"""Word records: structural numbering, sentence-end detection, character
counts, and quoted-speech spans, plus matrix and wordlist export.

The matrix is long-form: one row per word of the source, one column per
structural variable. Line numbering is global across the document (it
never resets at a canto boundary), which keeps line ids usable as a single
ordered axis for downstream analysis.
"""

from __future__ import annotations

import csv
import warnings
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ._util import atomic_writer
from .errors import BywordsWarning, TableFormatError
from .ingest import CANTO_MARK, LINE_MARK, MarkedToken, TokenKind

MATRIX_HEADER = ("canto", "line", "word", "charnum", "speech", "eos")
DEFAULT_TERMINAL = frozenset(".?!")
QUOTE_CHAR = '"'


@dataclass(frozen=True)
class WordRecord:
    """One word of the source text with its structural variables."""

    canto: int
    line: int
    word: str
    charnum: int
    speech: int
    eos: int


@dataclass(frozen=True)
class SpeechSpan:
    """Inclusive [start, end] range of word indices inside one quoted stretch."""

    start: int
    end: int


def number_structure(
    stream: Iterable[MarkedToken],
) -> tuple[list[str], list[int], list[int]]:
    """Strip markers and number each word by the markers seen so far.

    Returns ``(words, canto_ids, line_ids)``. A word seen before the first
    marker of a kind keeps id 0 for that kind, reported once as a warning.
    """
    words: list[str] = []
    canto_ids: list[int] = []
    line_ids: list[int] = []
    canto = line = 0
    warned_canto = warned_line = False
    for token in stream:
        if token.kind is TokenKind.CANTO:
            canto += 1
        elif token.kind is TokenKind.LINE:
            line += 1
        else:
            if canto == 0 and not warned_canto:
                warnings.warn(
                    f"word {token.text!r} precedes the first {CANTO_MARK} marker;"
                    " canto ids start at 0",
                    BywordsWarning,
                    stacklevel=2,
                )
                warned_canto = True
            if line == 0 and not warned_line:
                warnings.warn(
                    f"word {token.text!r} precedes the first {LINE_MARK} marker;"
                    " line ids start at 0",
                    BywordsWarning,
                    stacklevel=2,
                )
                warned_line = True
            words.append(token.text)
            canto_ids.append(canto)
            line_ids.append(line)
    return words, canto_ids, line_ids


def detect_eos(word: str, terminal: frozenset[str] = DEFAULT_TERMINAL) -> int:
    """1 if the token carries terminal punctuation anywhere, else 0."""
    return 1 if any(c in terminal for c in word) else 0


def strip_word(word: str, terminal: frozenset[str] = DEFAULT_TERMINAL) -> str:
    """Bare form used for character counts and matching.

    Drops every double-quote character, then the entire trailing run of
    terminal punctuation. Apostrophes (leading ones included) are part of
    the word and stay.
    """
    bare = word.replace(QUOTE_CHAR, "")
    bare = bare.rstrip("".join(terminal))
    if word and not bare:
        warnings.warn(
            f"token {word!r} is empty after stripping; charnum will be 0",
            BywordsWarning,
            stacklevel=2,
        )
    return bare


def detect_speech(words: Sequence[str]) -> tuple[list[int], list[SpeechSpan]]:
    """Pair double-quote occurrences across tokens into speech spans.

    Quote characters are counted across the whole sequence; the 1st/2nd,
    3rd/4th, ... occurrences open and close spans. Every word from an
    opening token through its closing token inclusive is flagged 1, and a
    token containing two quotes is a complete one-word span. An odd total
    closes the final span at the end of the document and warns.
    """
    flags = [0] * len(words)
    spans: list[SpeechSpan] = []
    open_span = False
    start = 0
    for idx, word in enumerate(words):
        quotes = word.count(QUOTE_CHAR)
        if not open_span and not quotes:
            continue
        flags[idx] = 1
        if not open_span:
            start = idx
        if quotes % 2 == 1:
            open_span = not open_span
        if quotes and not open_span:
            spans.append(SpeechSpan(start, idx))
    if open_span:
        warnings.warn(
            "odd number of quote characters; final speech span closes at the"
            " end of the document",
            BywordsWarning,
            stacklevel=2,
        )
        spans.append(SpeechSpan(start, len(words) - 1))
    return flags, spans


def build_matrix(
    stream: Iterable[MarkedToken],
    terminal: frozenset[str] = DEFAULT_TERMINAL,
) -> list[WordRecord]:
    """Assemble one record per word from a marked token stream."""
    words, canto_ids, line_ids = number_structure(stream)
    flags, _ = detect_speech(words)
    records = []
    for word, canto, line, speech in zip(words, canto_ids, line_ids, flags):
        records.append(
            WordRecord(
                canto=canto,
                line=line,
                word=word,
                charnum=len(strip_word(word, terminal)),
                speech=speech,
                eos=detect_eos(word, terminal),
            )
        )
    return records


def export_matrix(records: Sequence[WordRecord], path) -> None:
    """Write the comma-delimited matrix with the canonical six-column header.

    Fields containing the delimiter or a quote character are quote-escaped,
    so export followed by import is the identity.
    """
    with atomic_writer(path) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(MATRIX_HEADER)
        for r in records:
            writer.writerow([r.canto, r.line, r.word, r.charnum, r.speech, r.eos])


def import_matrix(path) -> list[WordRecord]:
    """Load a matrix file written by :func:`export_matrix`."""
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != list(MATRIX_HEADER):
            raise TableFormatError(
                f"{path}: expected header {','.join(MATRIX_HEADER)!r}, found {header}"
            )
        records = []
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(MATRIX_HEADER):
                raise TableFormatError(
                    f"{path}: line {lineno}: expected {len(MATRIX_HEADER)} fields,"
                    f" found {len(row)}"
                )
            try:
                records.append(
                    WordRecord(
                        canto=int(row[0]),
                        line=int(row[1]),
                        word=row[2],
                        charnum=int(row[3]),
                        speech=int(row[4]),
                        eos=int(row[5]),
                    )
                )
            except ValueError:
                raise TableFormatError(
                    f"{path}: line {lineno}: non-integer value in a numeric column"
                ) from None
    return records


def export_wordlist(records: Sequence[WordRecord], path) -> None:
    """One verbatim word per line, ready for external per-word analyzers."""
    with atomic_writer(path, newline="") as f:
        for r in records:
            f.write(r.word + "\n")
