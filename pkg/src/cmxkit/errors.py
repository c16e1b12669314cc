"""Exception types shared across the pipeline."""


class DataError(Exception):
    """Malformed or inconsistent input data. The CLI maps this to exit code 2."""


class CorpusFormatError(DataError):
    """A corpus or pair file violates the JSONL record schema."""


class TransliterationError(DataError):
    """A Devanagari codepoint has no table entry."""
