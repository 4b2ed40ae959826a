"""Tokenizer for the supported C subset."""

from __future__ import annotations

from collections.abc import Iterable

from .errors import LexError
from .tokens import SourceLocation, Token, TokenKind

KEYWORDS = frozenset(
    {
        "void", "char", "short", "int", "long", "signed", "unsigned",
        "float", "double", "struct", "const", "volatile", "static", "extern",
        "if", "else", "while", "for", "do", "return", "sizeof",
        # Recognized so the parser can name them in "unsupported construct"
        # errors instead of reporting a generic bad identifier.
        "goto", "switch", "case", "default", "break", "continue",
        "typedef", "union", "enum", "register", "auto",
    }
)

# Longest-first so maximal munch falls out of a linear scan.
PUNCTUATORS = sorted(
    [
        "<<=", ">>=", "...",
        "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
        "+=", "-=", "*=", "/=", "%=", "&=", "^=", "|=",
        "[", "]", "(", ")", "{", "}", ".", ",", ";", ":", "?",
        "+", "-", "*", "/", "%", "&", "|", "^", "~", "!", "<", ">", "=",
    ],
    key=len,
    reverse=True,
)

# Built-in macro table: the only two object-like macros the analyzer expands.
EOF_VALUE = "-1"
NULL_VALUE = "0"

_IDENT_START = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_DIGITS = frozenset("0123456789")
_IDENT_CONT = _IDENT_START | _DIGITS


class _Scanner:
    def __init__(self, text: str, path: str):
        self.text = text
        self.path = path
        self.pos = 0
        self.line = 1
        self.col = 1

    def loc(self) -> SourceLocation:
        return SourceLocation(self.path, self.line, self.col)

    def peek(self, offset: int = 0) -> str:
        i = self.pos + offset
        return self.text[i] if i < len(self.text) else ""

    def advance(self, count: int = 1) -> str:
        taken = self.text[self.pos : self.pos + count]
        for ch in taken:
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += len(ch.encode("utf-8"))
        self.pos += count
        return taken


def _scan_number(s: _Scanner) -> Token:
    loc = s.loc()
    start = s.pos
    is_float = False
    if s.peek() == "0" and s.peek(1) in "xX":
        s.advance(2)
        while s.peek() and s.peek() in "0123456789abcdefABCDEF":
            s.advance()
    else:
        while s.peek() in _DIGITS:
            s.advance()
        if s.peek() == "." and s.peek(1) in _DIGITS:
            is_float = True
            s.advance()
            while s.peek() in _DIGITS:
                s.advance()
        if s.peek() in "eE" and (
            s.peek(1) in _DIGITS or (s.peek(1) in "+-" and s.peek(2) in _DIGITS)
        ):
            is_float = True
            s.advance()
            if s.peek() in "+-":
                s.advance()
            while s.peek() in _DIGITS:
                s.advance()
    while s.peek() in "uUlLfF":
        if s.peek() in "fF":
            is_float = True
        s.advance()
    kind = TokenKind.FLOAT_LITERAL if is_float else TokenKind.INT_LITERAL
    return Token(kind, s.text[start : s.pos], loc)


def _scan_quoted(s: _Scanner, quote: str, kind: TokenKind, what: str) -> Token:
    loc = s.loc()
    start = s.pos
    s.advance()
    while True:
        ch = s.peek()
        if ch == "" or ch == "\n":
            raise LexError(f"unterminated {what}", loc)
        if ch == "\\":
            s.advance(2)
            continue
        s.advance()
        if ch == quote:
            break
    return Token(kind, s.text[start : s.pos], loc)


def tokenize(
    preprocessed: str, path: str, headers: Iterable[str] = ()
) -> list[Token]:
    """Turn preprocessed source into tokens, ending with one EOF marker.

    ``headers`` gates the built-in macro table: ``EOF`` expands to -1 only
    when stdio.h was included, ``NULL`` to 0 when any recognized header was.
    """
    headers = frozenset(headers)
    expand_eof = "stdio.h" in headers
    expand_null = bool(headers)
    s = _Scanner(preprocessed, path)
    tokens: list[Token] = []
    while s.pos < len(s.text):
        ch = s.peek()
        if ch in " \t\r\n\f\v":
            s.advance()
            continue
        if ch in _IDENT_START:
            loc = s.loc()
            start = s.pos
            while s.peek() in _IDENT_CONT:
                s.advance()
            text = s.text[start : s.pos]
            if text == "EOF" and expand_eof:
                tokens.append(
                    Token(TokenKind.INT_LITERAL, EOF_VALUE, loc, from_standard_macro="EOF")
                )
            elif text == "NULL" and expand_null:
                tokens.append(
                    Token(TokenKind.INT_LITERAL, NULL_VALUE, loc, from_standard_macro="NULL")
                )
            elif text in KEYWORDS:
                tokens.append(Token(TokenKind.KEYWORD, text, loc))
            else:
                tokens.append(Token(TokenKind.IDENTIFIER, text, loc))
            continue
        if ch in _DIGITS or (ch == "." and s.peek(1) in _DIGITS):
            tokens.append(_scan_number(s))
            continue
        if ch == '"':
            tokens.append(_scan_quoted(s, '"', TokenKind.STRING_LITERAL, "string literal"))
            continue
        if ch == "'":
            tokens.append(_scan_quoted(s, "'", TokenKind.CHAR_LITERAL, "character literal"))
            continue
        for p in PUNCTUATORS:
            if s.text.startswith(p, s.pos):
                loc = s.loc()
                s.advance(len(p))
                tokens.append(Token(TokenKind.PUNCTUATOR, p, loc))
                break
        else:
            raise LexError(f"illegal byte {ch!r}", s.loc())
    tokens.append(Token(TokenKind.EOF_MARKER, "", s.loc()))
    return tokens
