"""Exception types shared across the package."""


class AzobraError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedCodepointError(AzobraError):
    """A codepoint outside the supported character tables."""

    def __init__(self, codepoint: int):
        self.codepoint = codepoint
        super().__init__(f"unsupported codepoint U+{codepoint:04X}")


class NoCompositionError(AzobraError):
    """No composition is defined for a (base, accent) pair."""


class LayoutError(AzobraError):
    """A layout document violates the layout schema or its invariants."""


class SchemaError(LayoutError):
    """Malformed layout document: unknown field, bad type, bad value."""


class DuplicateChordError(LayoutError):
    """The same chord (or compose key) is bound more than once."""


class ChordConflictError(LayoutError):
    """A chord is bound both as a direct mapping and a dead-key trigger."""


class NonCanonicalOutputError(LayoutError):
    """A layout output sequence is not in canonical combining order."""


class PlatformError(AzobraError):
    """Operation not available for the layout's platform."""


class NoPopupError(AzobraError):
    """The requested base key has no popup strip."""


class PopupIndexError(AzobraError):
    """Popup selection index outside the strip."""


class ReplayParseError(AzobraError):
    """A replay script contains an unknown token or malformed directive."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")
