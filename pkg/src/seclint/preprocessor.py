"""Minimal preprocessing pass: comment removal, include recording, macro gate.

The pass keeps the byte geometry of everything that survives it, so token
locations computed later point back into the original file.  Directives whose
semantics the analyzer cannot see (macro definitions, conditional compilation)
are rejected instead of approximated.
"""

from __future__ import annotations

import re

from .errors import UnsupportedDirective
from .tokens import SourceLocation

# C90/C99 hosted core; sufficient for every rule family shipped here.
RECOGNIZED_HEADERS = frozenset(
    {
        "assert.h",
        "ctype.h",
        "errno.h",
        "limits.h",
        "locale.h",
        "math.h",
        "signal.h",
        "stdarg.h",
        "stddef.h",
        "stdio.h",
        "stdlib.h",
        "string.h",
        "time.h",
    }
)

_INCLUDE_RE = re.compile(r'^\s*#\s*include\s*(?:<([^>]+)>|"([^"]+)")')
_DIRECTIVE_RE = re.compile(r"^\s*#\s*([A-Za-z_]\w*)?")
_DEVIATION_RE = re.compile(
    r"/\*\s*seclint-deviation:\s*([A-Za-z0-9_.]+)\s*(.*?)\s*\*/", re.DOTALL
)


def _space_for(ch: str) -> str:
    # Blanking must preserve byte columns, so multi-byte characters are
    # replaced by one space per encoded byte.
    return " " * len(ch.encode("utf-8"))


def _strip_comments(text: str) -> str:
    out: list[str] = []
    i = 0
    n = len(text)
    state = "code"  # code | block | line | string | char
    while i < n:
        ch = text[i]
        nxt = text[i + 1] if i + 1 < n else ""
        if state == "code":
            if ch == "/" and nxt == "*":
                out.append("  ")
                i += 2
                state = "block"
                continue
            if ch == "/" and nxt == "/":
                out.append("  ")
                i += 2
                state = "line"
                continue
            if ch == '"':
                state = "string"
            elif ch == "'":
                state = "char"
            out.append(ch)
        elif state == "block":
            if ch == "*" and nxt == "/":
                out.append("  ")
                i += 2
                state = "code"
                continue
            out.append("\n" if ch == "\n" else _space_for(ch))
        elif state == "line":
            if ch == "\n":
                out.append("\n")
                state = "code"
            else:
                out.append(_space_for(ch))
        elif state in ("string", "char"):
            if ch == "\\" and nxt:
                out.append(ch)
                out.append(nxt)
                i += 2
                continue
            if ch == "\n":  # unterminated; let the lexer report it
                state = "code"
            elif state == "string" and ch == '"':
                state = "code"
            elif state == "char" and ch == "'":
                state = "code"
            out.append(ch)
        i += 1
    return "".join(out)


def preprocess(source_text: str, path: str) -> tuple[str, set[str]]:
    """Strip comments, record and blank #include lines, reject other directives.

    Returns the geometry-preserving preprocessed text together with the set of
    recognized standard headers the file included.  Raises UnsupportedDirective
    for macro definitions and conditional compilation.
    """
    stripped = _strip_comments(source_text)
    headers: set[str] = set()
    out_lines: list[str] = []
    for lineno, line in enumerate(stripped.split("\n"), start=1):
        if not line.lstrip().startswith("#"):
            out_lines.append(line)
            continue
        m = _INCLUDE_RE.match(line)
        if m:
            name = m.group(1) or m.group(2)
            if name in RECOGNIZED_HEADERS:
                headers.add(name)
            out_lines.append("".join(_space_for(c) for c in line))
            continue
        dm = _DIRECTIVE_RE.match(line)
        name = dm.group(1) if dm else None
        if name is None:
            # Null directive: a lone '#' is legal and has no effect.
            out_lines.append("".join(_space_for(c) for c in line))
            continue
        col = line.index("#") + 1
        raise UnsupportedDirective(
            f"unsupported preprocessor directive '#{name}'",
            SourceLocation(path, lineno, col),
        )
    return "\n".join(out_lines), headers


def collect_deviations(source_text: str) -> dict[int, list[tuple[str, str]]]:
    """Map line number -> deviation records declared on that line.

    A record on line N suppresses the named guideline's diagnostics on line
    N + 1; the justification text travels with the record for audit output.
    """
    deviations: dict[int, list[tuple[str, str]]] = {}
    for lineno, line in enumerate(source_text.split("\n"), start=1):
        for m in _DEVIATION_RE.finditer(line):
            deviations.setdefault(lineno, []).append((m.group(1), m.group(2)))
    return deviations
