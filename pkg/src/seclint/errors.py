"""Exception types shared across the analyzer."""


class SeclintError(Exception):
    """Base class for every error this package raises deliberately."""


class SourceError(SeclintError):
    """An error tied to a position in a source file."""

    def __init__(self, message: str, loc):
        super().__init__(message)
        self.message = message
        self.loc = loc

    def __str__(self) -> str:
        if self.loc is None:
            return self.message
        return f"{self.loc}: {self.message}"


class UnsupportedDirective(SourceError):
    """A preprocessor directive the analyzer refuses to approximate."""


class LexError(SourceError):
    """Unterminated literal or byte the lexer cannot classify."""


class ParseError(SourceError):
    """Input outside the supported C subset, or malformed syntax."""

    def __init__(self, message: str, loc, expected: str | None = None):
        super().__init__(message, loc)
        self.expected = expected


class RedeclarationError(SourceError):
    """Two declarations of the same name in one scope."""

    def __init__(self, message: str, loc, prior_loc):
        super().__init__(message, loc)
        self.prior_loc = prior_loc


class MappingError(SeclintError):
    """Base class for coverage mapping file problems."""


class MalformedMapping(MappingError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class DanglingReference(MappingError):
    def __init__(self, line_no: int, kind: str, ref: str):
        super().__init__(f"line {line_no}: unknown {kind} '{ref}'")
        self.line_no = line_no
        self.kind = kind
        self.ref = ref


class DuplicateEntry(MappingError):
    def __init__(self, line_no: int, rule_id: str, profile: str):
        super().__init__(f"line {line_no}: duplicate entry for ({rule_id}, {profile})")
        self.line_no = line_no
        self.rule_id = rule_id
        self.profile = profile


class IncompleteMapping(MappingError):
    def __init__(self, ruleset: str, profile: str, missing: list[str]):
        listed = ", ".join(missing)
        super().__init__(
            f"no entry for {len(missing)} {ruleset} rule(s) under profile "
            f"{profile}: {listed}"
        )
        self.ruleset = ruleset
        self.profile = profile
        self.missing = missing
