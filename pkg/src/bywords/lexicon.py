"""Category dictionaries and per-word scoring.

Scores mirror per-segment percentage columns under one-word segments, so
every value is 0 or 100: Seg (the row ordinal), WC and WPS (always 1 when
each word is its own segment), Sixltr (word longer than six characters),
one column per user category, and Dic (the word matched any category).
"""

from __future__ import annotations

import csv
from collections.abc import Sequence
from dataclasses import dataclass

from ._util import atomic_writer
from .errors import DictionaryError
from .matrix import DEFAULT_TERMINAL, WordRecord, strip_word

ANALYSIS_BASE_HEADER = ("Filename", "Seg", "WC", "WPS", "Sixltr", "Dic")
SIXLTR_MIN_CHARS = 7


@dataclass(frozen=True)
class Category:
    """One named category: exact literals plus prefix stems (from ``foo*``)."""

    name: str
    literals: frozenset[str]
    stems: tuple[str, ...]


@dataclass(frozen=True)
class Lexicon:
    """Ordered collection of categories loaded from a dictionary file."""

    categories: tuple[Category, ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.categories)


EMPTY_LEXICON = Lexicon(categories=())


@dataclass(frozen=True)
class AnalysisRow:
    """Scores for one word; category_scores follows the lexicon's order."""

    seg: int
    wc: int
    wps: int
    sixltr: int
    dic: int
    category_scores: tuple[int, ...]


def load_dictionary(path) -> Lexicon:
    """Parse a category dictionary file.

    ``[name]`` lines open a category; each following non-blank line is one
    entry; ``#`` starts a comment line. An entry is a literal word or a stem
    ending in ``*``, which matches any word with that prefix. Entries are
    matched case-insensitively. Duplicate category names, entries with
    embedded whitespace, a lone ``*``, or a ``*`` anywhere but the end are
    errors.
    """
    categories: list[tuple[str, list[str]]] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                name = line[1:-1].strip()
                if not name:
                    raise DictionaryError(f"{path}: line {lineno}: empty category name")
                if name in seen:
                    raise DictionaryError(
                        f"{path}: line {lineno}: duplicate category {name!r}"
                    )
                seen.add(name)
                categories.append((name, []))
                continue
            if len(line.split()) != 1:
                raise DictionaryError(
                    f"{path}: line {lineno}: entry {line!r} contains whitespace"
                )
            if line == "*":
                raise DictionaryError(
                    f"{path}: line {lineno}: a lone '*' is not a valid entry"
                )
            if "*" in line[:-1]:
                raise DictionaryError(
                    f"{path}: line {lineno}: '*' is only allowed at the end of an entry"
                )
            if not categories:
                raise DictionaryError(
                    f"{path}: line {lineno}: entry before any [category] header"
                )
            categories[-1][1].append(line.lower())

    built = []
    for name, entries in categories:
        literals = frozenset(e for e in entries if not e.endswith("*"))
        stems = tuple(e[:-1] for e in entries if e.endswith("*"))
        built.append(Category(name=name, literals=literals, stems=stems))
    return Lexicon(categories=tuple(built))


def match_word(stripped: str, lexicon: Lexicon) -> tuple[int, ...]:
    """Per-category hit bits for one bare word (case-insensitive)."""
    w = stripped.lower()
    bits = []
    for cat in lexicon.categories:
        hit = w in cat.literals or any(w.startswith(s) for s in cat.stems)
        bits.append(1 if hit else 0)
    return tuple(bits)


def analyze(
    records: Sequence[WordRecord],
    lexicon: Lexicon,
    terminal: frozenset[str] = DEFAULT_TERMINAL,
) -> list[AnalysisRow]:
    """Score every record, one row per word, percentages in {0, 100}.

    Matching runs on the stripped word form; Sixltr comes from the stored
    charnum; Dic is the maximum over the category scores.
    """
    rows = []
    for seg, record in enumerate(records, start=1):
        bits = match_word(strip_word(record.word, terminal), lexicon)
        scores = tuple(100 * b for b in bits)
        rows.append(
            AnalysisRow(
                seg=seg,
                wc=1,
                wps=1,
                sixltr=100 if record.charnum >= SIXLTR_MIN_CHARS else 0,
                dic=max(scores, default=0),
                category_scores=scores,
            )
        )
    return rows


def write_analysis(
    records: Sequence[WordRecord],
    rows: Sequence[AnalysisRow],
    lexicon: Lexicon,
    path,
    delimiter: str = "\t",
) -> None:
    """Write a per-word analysis table shaped like external analyzer output.

    The identifier column holds the verbatim word, then Seg, WC, WPS,
    Sixltr, Dic, and one column per category. Tab-delimited by default, so
    the result feeds straight back into the external-table importer.
    """
    with atomic_writer(path) as f:
        writer = csv.writer(f, delimiter=delimiter, lineterminator="\n")
        writer.writerow(ANALYSIS_BASE_HEADER + lexicon.names)
        for record, row in zip(records, rows):
            writer.writerow(
                [record.word, row.seg, row.wc, row.wps, row.sixltr, row.dic]
                + list(row.category_scores)
            )
