"""Raw-text cleanup: configurable character removal, word splitting, and
structural markers for section and line boundaries.

The output of this stage is a flat stream of marked tokens, words
interleaved with ``[canto]`` and ``[line]`` markers, which downstream
numbering consumes. Structure detection is rule-driven: a regular
expression over raw source lines decides what counts as a section heading,
and a line policy decides where line markers go.
"""

from __future__ import annotations

import csv
import re
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from ._util import atomic_writer
from .errors import ConfigError

CANTO_MARK = "[canto]"
LINE_MARK = "[line]"


class HyphenPolicy(Enum):
    SPLIT = "split"
    KEEP = "keep"


class CasePolicy(Enum):
    LOWER = "lower"
    PRESERVE = "preserve"


class LinePolicy(Enum):
    EVERY_SOURCE_LINE = "every_source_line"
    PATTERN = "pattern"


@dataclass(frozen=True)
class CleanupRules:
    """Knobs for the cleanup pass.

    ``remove_chars`` are deleted outright; ``keep_terminal`` characters stay
    attached to words and drive end-of-sentence detection downstream. The
    two sets must not overlap. A source line matching ``canto_pattern`` is
    consumed and replaced by a canto marker. Under the default line policy
    every other non-blank line contributes a line marker; under the pattern
    policy only lines matching ``line_pattern`` do (those lines are still
    tokenized, unlike canto headings).
    """

    remove_chars: frozenset[str] = frozenset(",:;")
    keep_terminal: frozenset[str] = frozenset(".?!")
    hyphen_policy: HyphenPolicy = HyphenPolicy.SPLIT
    case_policy: CasePolicy = CasePolicy.LOWER
    canto_pattern: str | None = None
    line_policy: LinePolicy = LinePolicy.EVERY_SOURCE_LINE
    line_pattern: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "remove_chars", frozenset(self.remove_chars))
        object.__setattr__(self, "keep_terminal", frozenset(self.keep_terminal))
        overlap = self.remove_chars & self.keep_terminal
        if overlap:
            raise ConfigError(
                f"remove_chars and keep_terminal overlap: {''.join(sorted(overlap))!r}"
            )
        for name, pattern in (
            ("canto_pattern", self.canto_pattern),
            ("line_pattern", self.line_pattern),
        ):
            if pattern is not None:
                try:
                    re.compile(pattern)
                except re.error as exc:
                    raise ConfigError(f"invalid {name} {pattern!r}: {exc}") from None
        if self.line_policy is LinePolicy.PATTERN and self.line_pattern is None:
            raise ConfigError("line_policy=pattern requires a line_pattern")


DEFAULT_RULES = CleanupRules()


class TokenKind(Enum):
    WORD = "word"
    CANTO = "canto"
    LINE = "line"


@dataclass(frozen=True)
class MarkedToken:
    """One element of the cleaned stream: a word or a structural marker."""

    kind: TokenKind
    text: str = ""

    @classmethod
    def word(cls, text: str) -> MarkedToken:
        return cls(TokenKind.WORD, text)


CANTO_TOKEN = MarkedToken(TokenKind.CANTO)
LINE_TOKEN = MarkedToken(TokenKind.LINE)


def clean_line(line: str, rules: CleanupRules = DEFAULT_RULES) -> list[str]:
    """Split one source line into cleaned word tokens.

    Deletes ``remove_chars``, optionally lowercases, and (under the split
    policy) turns hyphens into token boundaries. Terminal punctuation and
    quote characters stay attached to their word. Tokens that clean away
    entirely, such as a bare dash, are dropped.
    """
    text = line.lower() if rules.case_policy is CasePolicy.LOWER else line
    if rules.remove_chars:
        text = text.translate({ord(c): None for c in rules.remove_chars})
    if rules.hyphen_policy is HyphenPolicy.SPLIT:
        text = text.replace("-", " ")
    return text.split()


def mark_structure(document: str, rules: CleanupRules = DEFAULT_RULES) -> list[MarkedToken]:
    """Turn a whole document into a marked token stream.

    Lines matching ``canto_pattern`` become a canto marker and are not
    tokenized. Blank lines are skipped entirely. Every other line yields a
    line marker (policy permitting) followed by its cleaned words.
    """
    canto_re = re.compile(rules.canto_pattern) if rules.canto_pattern is not None else None
    line_re = re.compile(rules.line_pattern) if rules.line_pattern is not None else None
    stream: list[MarkedToken] = []
    for raw in document.splitlines():
        if canto_re is not None and canto_re.search(raw):
            stream.append(CANTO_TOKEN)
            continue
        if not raw.strip():
            continue
        if rules.line_policy is LinePolicy.EVERY_SOURCE_LINE:
            stream.append(LINE_TOKEN)
        elif line_re is not None and line_re.search(raw):
            stream.append(LINE_TOKEN)
        stream.extend(MarkedToken.word(w) for w in clean_line(raw, rules))
    return stream


def _spell(token: MarkedToken) -> str:
    if token.kind is TokenKind.CANTO:
        return CANTO_MARK
    if token.kind is TokenKind.LINE:
        return LINE_MARK
    return token.text


def write_cleaned(stream: Iterable[MarkedToken], path) -> None:
    """Write a token stream, one token per record, markers spelled
    ``[canto]`` / ``[line]``.

    Records go through the csv module so the rare token containing a comma
    or quote character survives a round trip. A word whose literal text is
    a marker spelling would read back as a marker; the cleanup rules never
    produce such words from running text.
    """
    with atomic_writer(path) as f:
        writer = csv.writer(f, lineterminator="\n")
        for token in stream:
            writer.writerow([_spell(token)])


def read_cleaned(path) -> list[MarkedToken]:
    """Read a cleaned token file back into a marked stream.

    Both newlines and commas delimit records, so one-token-per-line files
    and single-line comma-joined files load identically.
    """
    stream: list[MarkedToken] = []
    with open(path, encoding="utf-8", newline="") as f:
        for row in csv.reader(f):
            for cell in row:
                if not cell:
                    continue
                if cell == CANTO_MARK:
                    stream.append(CANTO_TOKEN)
                elif cell == LINE_MARK:
                    stream.append(LINE_TOKEN)
                else:
                    stream.append(MarkedToken.word(cell))
    return stream


_RULE_KEYS = frozenset(
    {
        "remove_chars",
        "keep_terminal",
        "hyphen_policy",
        "case_policy",
        "canto_pattern",
        "line_policy",
        "line_pattern",
    }
)


def load_rules(path) -> CleanupRules:
    """Parse a flat ``key = value`` rules file.

    Blank lines and lines starting with ``#`` are ignored. Character-set
    values (``remove_chars``, ``keep_terminal``) are written as a plain run
    of characters, e.g. ``remove_chars = ,:;``. Unknown or duplicate keys
    are configuration errors.
    """
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}: line {lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key not in _RULE_KEYS:
                raise ConfigError(f"{path}: line {lineno}: unknown key {key!r}")
            if key in values:
                raise ConfigError(f"{path}: line {lineno}: duplicate key {key!r}")
            values[key] = value

    kwargs: dict[str, object] = {}
    if "remove_chars" in values:
        kwargs["remove_chars"] = frozenset(values["remove_chars"])
    if "keep_terminal" in values:
        kwargs["keep_terminal"] = frozenset(values["keep_terminal"])
    try:
        if "hyphen_policy" in values:
            kwargs["hyphen_policy"] = HyphenPolicy(values["hyphen_policy"])
        if "case_policy" in values:
            kwargs["case_policy"] = CasePolicy(values["case_policy"])
        if "line_policy" in values:
            kwargs["line_policy"] = LinePolicy(values["line_policy"])
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    if "canto_pattern" in values:
        kwargs["canto_pattern"] = values["canto_pattern"]
    if "line_pattern" in values:
        kwargs["line_pattern"] = values["line_pattern"]
    return CleanupRules(**kwargs)
