"""Source locations and lexical tokens."""

from __future__ import annotations

import enum
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class SourceLocation:
    """A 1-based (line, column) position in a file; columns count bytes."""

    file: str
    line: int
    column: int

    def __post_init__(self):
        if not self.file:
            raise ValueError("SourceLocation.file must be non-empty")
        if self.line < 1 or self.column < 1:
            raise ValueError("SourceLocation line/column are 1-based")

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"


class TokenKind(enum.Enum):
    IDENTIFIER = "identifier"
    KEYWORD = "keyword"
    INT_LITERAL = "integer-literal"
    FLOAT_LITERAL = "float-literal"
    CHAR_LITERAL = "char-literal"
    STRING_LITERAL = "string-literal"
    PUNCTUATOR = "punctuator"
    EOF_MARKER = "eof-marker"


@dataclass
class Token:
    kind: TokenKind
    text: str
    loc: SourceLocation
    # Set only on tokens produced by expanding the built-in EOF/NULL macro
    # definitions; carries "EOF" or "NULL".
    from_standard_macro: str | None = None

    def __repr__(self) -> str:
        macro = f" <{self.from_standard_macro}>" if self.from_standard_macro else ""
        return f"Token({self.kind.value}, {self.text!r}, {self.loc}{macro})"
