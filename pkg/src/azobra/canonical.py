"""Codepoint-level operations for Idu Azobra text.

The orthography extends the Latin alphabet with the schwa, retracted
vowels written with U+0331 Combining Macron Below, and four accent marks
(grave, acute, tilde, macron) used for tone and nasalization. A single
vowel can stack retraction and an accent, and the marks must then appear
in ascending canonical-combining-class order: U+0331 has class 220 and
precedes the class-230 accents. Text with marks in any other order
compares unequal to canonical text even though it renders the same, so
everything this package emits is kept canonical, and `repair_order` puts
arbitrary text into canonical order.

Combining-class and precomposition data is embedded as static tables
covering this orthography plus common Latin marks; no Unicode database
lookup happens at runtime, which keeps behavior identical on every
platform and the data auditable in one place.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoCompositionError, UnsupportedCodepointError

GRAVE = 0x0300
ACUTE = 0x0301
TILDE = 0x0303
MACRON = 0x0304
MACRON_BELOW = 0x0331

ACCENT_MARKS = (GRAVE, ACUTE, TILDE, MACRON)

# Canonical combining classes for the marks this package understands:
# the orthography's own marks plus common Latin diacritics, so repair
# also fixes mixed text pasted from elsewhere.
COMBINING_CLASSES: dict[int, int] = {
    0x0300: 230,  # grave
    0x0301: 230,  # acute
    0x0302: 230,  # circumflex
    0x0303: 230,  # tilde
    0x0304: 230,  # macron
    0x0306: 230,  # breve
    0x0307: 230,  # dot above
    0x0308: 230,  # diaeresis
    0x030A: 230,  # ring above
    0x030B: 230,  # double acute
    0x030C: 230,  # caron
    0x0323: 220,  # dot below
    0x0324: 220,  # diaeresis below
    0x0325: 220,  # ring below
    0x0327: 202,  # cedilla
    0x0328: 202,  # ogonek
    0x0330: 220,  # tilde below
    0x0331: 220,  # macron below (retraction)
    0x0332: 220,  # low line
}

# (base, accent) -> precomposed codepoint. Only plain Latin vowels have
# precomposed accented forms; schwa combinations stay multi-codepoint.
PRECOMPOSED: dict[tuple[int, int], int] = {
    (0x61, GRAVE): 0x00E0, (0x61, ACUTE): 0x00E1, (0x61, TILDE): 0x00E3, (0x61, MACRON): 0x0101,
    (0x65, GRAVE): 0x00E8, (0x65, ACUTE): 0x00E9, (0x65, TILDE): 0x1EBD, (0x65, MACRON): 0x0113,
    (0x69, GRAVE): 0x00EC, (0x69, ACUTE): 0x00ED, (0x69, TILDE): 0x0129, (0x69, MACRON): 0x012B,
    (0x6F, GRAVE): 0x00F2, (0x6F, ACUTE): 0x00F3, (0x6F, TILDE): 0x00F5, (0x6F, MACRON): 0x014D,
    (0x75, GRAVE): 0x00F9, (0x75, ACUTE): 0x00FA, (0x75, TILDE): 0x0169, (0x75, MACRON): 0x016B,
    (0x41, GRAVE): 0x00C0, (0x41, ACUTE): 0x00C1, (0x41, TILDE): 0x00C3, (0x41, MACRON): 0x0100,
    (0x45, GRAVE): 0x00C8, (0x45, ACUTE): 0x00C9, (0x45, TILDE): 0x1EBC, (0x45, MACRON): 0x0112,
    (0x49, GRAVE): 0x00CC, (0x49, ACUTE): 0x00CD, (0x49, TILDE): 0x0128, (0x49, MACRON): 0x012A,
    (0x4F, GRAVE): 0x00D2, (0x4F, ACUTE): 0x00D3, (0x4F, TILDE): 0x00D5, (0x4F, MACRON): 0x014C,
    (0x55, GRAVE): 0x00D9, (0x55, ACUTE): 0x00DA, (0x55, TILDE): 0x0168, (0x55, MACRON): 0x016A,
}

DECOMPOSITIONS: dict[int, tuple[int, int]] = {
    pre: pair for pair, pre in PRECOMPOSED.items()
}

SCHWA = 0x0259
CAPITAL_SCHWA = 0x018F

COMPOSABLE_BASES = frozenset(map(ord, "aeiouAEIOU")) | {SCHWA, CAPITAL_SCHWA}

# Starters known to the strict combining-class lookup: printable ASCII
# (everything a bare keyboard types), the schwas, the precomposed vowels,
# and the spacing accents that cancelled dead keys emit.
_STARTERS = (
    frozenset(range(0x20, 0x7F))
    | {SCHWA, CAPITAL_SCHWA, 0x00B4, 0x00AF}
    | frozenset(DECOMPOSITIONS)
)


def is_supported(cp: int) -> bool:
    """True if the codepoint is in the embedded character tables."""
    return cp in _STARTERS or cp in COMBINING_CLASSES


def combining_class(cp: int) -> int:
    """Canonical combining class of a supported codepoint.

    Raises UnsupportedCodepointError for codepoints outside the tables;
    use `combining_class_lenient` for arbitrary text.
    """
    ccc = COMBINING_CLASSES.get(cp)
    if ccc is not None:
        return ccc
    if cp in _STARTERS:
        return 0
    raise UnsupportedCodepointError(cp)


def combining_class_lenient(cp: int) -> int:
    """Combining class with unknown codepoints treated as starters."""
    return COMBINING_CLASSES.get(cp, 0)


def repair_order(text: str) -> str:
    """Reorder combining marks into canonical (ascending class) order.

    Within each maximal run of combining marks, marks are stably sorted
    by combining class. Starters never move, ties keep their relative
    order, and unknown codepoints are treated as starters, so this is
    total over arbitrary pasted text and idempotent.
    """
    repaired, _ = repair_order_counting(text)
    return repaired


def repair_order_counting(text: str) -> tuple[str, int]:
    """repair_order plus the number of mark runs whose order changed."""
    out: list[str] = []
    changed = 0
    i = 0
    n = len(text)
    while i < n:
        if combining_class_lenient(ord(text[i])) == 0:
            out.append(text[i])
            i += 1
            continue
        j = i
        while j < n and combining_class_lenient(ord(text[j])) != 0:
            j += 1
        run = text[i:j]
        fixed = "".join(sorted(run, key=lambda c: combining_class_lenient(ord(c))))
        if fixed != run:
            changed += 1
        out.append(fixed)
        i = j
    return "".join(out), changed


def is_canonical(text: str) -> bool:
    """True if the text is already in canonical combining order."""
    return repair_order(text) == text


def grapheme_split(text: str) -> list[str]:
    """Split text into clusters of one starter plus its trailing marks.

    Leading marks with no base collect into a cluster of their own.
    Clusters concatenate back to the input unchanged.
    """
    clusters: list[str] = []
    for ch in text:
        if clusters and combining_class_lenient(ord(ch)) != 0:
            clusters[-1] += ch
        else:
            clusters.append(ch)
    return clusters


def compose(base: int, accent: int) -> str:
    """Compose a vowel or schwa with an accent mark.

    Returns the single precomposed character when one exists, otherwise
    the canonical base+mark sequence. Raises NoCompositionError for
    pairs outside the supported bases and accents.
    """
    if base not in COMPOSABLE_BASES or accent not in ACCENT_MARKS:
        raise NoCompositionError(
            f"no composition for U+{base:04X} + U+{accent:04X}"
        )
    pre = PRECOMPOSED.get((base, accent))
    if pre is not None:
        return chr(pre)
    return chr(base) + chr(accent)


def decompose(text: str) -> str:
    """Expand precomposed characters and return the canonical sequence.

    The result contains no precomposed codepoints. Used for equivalence
    checks between the shipped multi-codepoint forms and precomposed
    spellings of the same character.
    """
    out: list[str] = []
    for ch in text:
        cp = ord(ch)
        pair = DECOMPOSITIONS.get(cp)
        if pair is not None:
            out.extend(chr(c) for c in pair)
        elif is_supported(cp):
            out.append(ch)
        else:
            raise UnsupportedCodepointError(cp)
    return repair_order("".join(out))


def to_hex(text: str) -> str:
    """Render text as space-separated uppercase hex codepoints."""
    return " ".join(f"{ord(c):04X}" for c in text)


def from_hex(spec: str) -> str:
    """Parse a space-separated hex codepoint string back into text."""
    parts = spec.split()
    return "".join(chr(int(p, 16)) for p in parts)


@dataclass(frozen=True)
class CharacterForm:
    """One orthographic character as a canonical codepoint sequence."""

    sequence: str
    label: str
    category: str
    case: str  # "lower" | "upper"

    def __post_init__(self):
        if not self.sequence:
            raise ValueError(f"{self.label}: empty sequence")
        if combining_class_lenient(ord(self.sequence[0])) != 0:
            raise ValueError(f"{self.label}: sequence starts with a combining mark")
        if not is_canonical(self.sequence):
            raise ValueError(f"{self.label}: sequence not in canonical order")
        if self.case not in ("lower", "upper"):
            raise ValueError(f"{self.label}: bad case {self.case!r}")

    @property
    def hex(self) -> str:
        return to_hex(self.sequence)
