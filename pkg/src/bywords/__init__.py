"""bywords: word-level long-form matrices and categorical recurrence
analysis for text corpora.

The pipeline turns raw text into a matrix with one row per word (canto,
line, word, charnum, speech, eos), scores words against category
dictionaries, joins external per-word analysis tables, and quantifies
recurrence structure over any column.
"""

__version__ = "0.1.0"

from .errors import (
    BywordsError,
    BywordsWarning,
    ConfigError,
    DictionaryError,
    JoinMismatchError,
    TableFormatError,
)
from .ingest import (
    CANTO_MARK,
    LINE_MARK,
    CasePolicy,
    CleanupRules,
    HyphenPolicy,
    LinePolicy,
    MarkedToken,
    TokenKind,
    clean_line,
    load_rules,
    mark_structure,
    read_cleaned,
    write_cleaned,
)
from .matrix import (
    MATRIX_HEADER,
    SpeechSpan,
    WordRecord,
    build_matrix,
    detect_eos,
    detect_speech,
    export_matrix,
    export_wordlist,
    import_matrix,
    number_structure,
    strip_word,
)
from .lexicon import (
    AnalysisRow,
    Category,
    Lexicon,
    analyze,
    load_dictionary,
    match_word,
    write_analysis,
)
from .integrate import ExternalTable, import_external, join_rows
from .recurrence import (
    RecurrencePlot,
    RqaMetrics,
    column_values,
    export_plot,
    recurrence_matrix,
    rqa,
    write_metrics,
)

__all__ = [
    "__version__",
    "BywordsError",
    "BywordsWarning",
    "ConfigError",
    "DictionaryError",
    "JoinMismatchError",
    "TableFormatError",
    "CANTO_MARK",
    "LINE_MARK",
    "CasePolicy",
    "CleanupRules",
    "HyphenPolicy",
    "LinePolicy",
    "MarkedToken",
    "TokenKind",
    "clean_line",
    "load_rules",
    "mark_structure",
    "read_cleaned",
    "write_cleaned",
    "MATRIX_HEADER",
    "SpeechSpan",
    "WordRecord",
    "build_matrix",
    "detect_eos",
    "detect_speech",
    "export_matrix",
    "export_wordlist",
    "import_matrix",
    "number_structure",
    "strip_word",
    "AnalysisRow",
    "Category",
    "Lexicon",
    "analyze",
    "load_dictionary",
    "match_word",
    "write_analysis",
    "ExternalTable",
    "import_external",
    "join_rows",
    "RecurrencePlot",
    "RqaMetrics",
    "column_values",
    "export_plot",
    "recurrence_matrix",
    "rqa",
    "write_metrics",
]
