"""The shipped Idu Azobra character inventory and keyboard layouts.

The JSON files under ``azobra/data/`` are the source of truth consumed
at runtime and by the validation CLI; they are version-controlled and
hex-encoded for community auditing. The ``build_*`` functions here are
the generators those files were written from (via
``scripts/build_layout_data.py``), and the test suite fails if files and
generators ever disagree.

Desktop: AltGr direct mappings for the schwa and retracted vowels, plus
four dead keys (backtick/apostrophe/tilde/hyphen on the AltGr layer) that
compose accents with plain vowels, the schwa, and the retracted vowels.
Mobile: long-press popup strips on a e i o u. Popup ordering puts the
orthography-specific characters first, then standard accented Latin
forms, each group in grave/acute/tilde/macron order; the exact order is
provisional pending community confirmation.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .canonical import (
    CAPITAL_SCHWA,
    MACRON_BELOW,
    SCHWA,
    CharacterForm,
    compose,
    from_hex,
    to_hex,
)
from .layout import (
    ACCENT_CODEPOINTS,
    ACCENT_IDS,
    ComposeRule,
    DeadKeyDef,
    Layout,
    PopupStrip,
    chord,
    parse_layout,
)

INVENTORY_FILE = "inventory.json"
DESKTOP_FILE = "desktop.json"
MOBILE_FILE = "mobile.json"

_RETRACT = chr(MACRON_BELOW)

# Accent id -> human-readable label fragment.
_ACCENT_LABEL = {"grave": "grave", "acute": "acute", "nasal": "tilde", "macron": "macron"}

# Dead-key standalone spacing characters, committed when composition
# fails or is cancelled: ` U+0060, acute U+00B4, ~ U+007E, macron U+00AF.
STANDALONE = {"grave": "`", "acute": "´", "nasal": "~", "macron": "¯"}

DEAD_KEY_TRIGGERS = {
    "grave": "backtick",
    "acute": "apostrophe",
    "nasal": "tilde",
    "macron": "hyphen",
}


def _accented_label(base_label: str, accent: str) -> str:
    if accent == "nasal":
        return f"nasalized {base_label}"
    return f"{base_label} with {_ACCENT_LABEL[accent]}"


def build_inventory() -> list[CharacterForm]:
    """All 44 orthographic forms, in their documented row order."""
    forms: list[CharacterForm] = []
    forms.append(CharacterForm(chr(SCHWA), "schwa", "schwa", "lower"))
    forms.append(CharacterForm(chr(CAPITAL_SCHWA), "capital schwa", "schwa", "upper"))

    retracted = [
        (chr(SCHWA), chr(CAPITAL_SCHWA), "schwa"),
        ("o", "O", "o"),
        ("u", "U", "u"),
    ]
    for lower, upper, name in retracted:
        forms.append(CharacterForm(lower + _RETRACT, f"retracted {name}", "retracted", "lower"))
        forms.append(CharacterForm(upper + _RETRACT, f"capital retracted {name}", "retracted", "upper"))

    for accent, category in (("grave", "grave"), ("acute", "acute"),
                             ("nasal", "nasalized"), ("macron", "macron")):
        mark = ACCENT_CODEPOINTS[accent]
        for v in "aeiou":
            forms.append(
                CharacterForm(compose(ord(v), mark), _accented_label(v, accent), category, "lower")
            )

    for accent in ACCENT_IDS:
        mark = ACCENT_CODEPOINTS[accent]
        forms.append(CharacterForm(chr(SCHWA) + chr(mark),
                                   _accented_label("schwa", accent), "accented-schwa", "lower"))
    for accent in ACCENT_IDS:
        mark = ACCENT_CODEPOINTS[accent]
        forms.append(CharacterForm(chr(SCHWA) + _RETRACT + chr(mark),
                                   _accented_label("retracted schwa", accent),
                                   "accented-retracted-schwa", "lower"))
    for base, name, category in (("o", "retracted o", "accented-retracted-o"),
                                 ("u", "retracted u", "accented-retracted-u")):
        for accent in ACCENT_IDS:
            mark = ACCENT_CODEPOINTS[accent]
            forms.append(CharacterForm(base + _RETRACT + chr(mark),
                                       _accented_label(name, accent), category, "lower"))
    return forms


def build_desktop_layout() -> Layout:
    """AltGr-layer desktop layout: direct mappings plus dead keys."""
    direct: dict = {}
    for key, lower, upper in (
        ("e", chr(SCHWA), chr(CAPITAL_SCHWA)),
        ("r", chr(SCHWA) + _RETRACT, chr(CAPITAL_SCHWA) + _RETRACT),
        ("o", "o" + _RETRACT, "O" + _RETRACT),
        ("u", "u" + _RETRACT, "U" + _RETRACT),
    ):
        direct[chord(key, "altgr")] = lower
        direct[chord(key, "altgr", "shift")] = upper

    dead_keys = tuple(
        DeadKeyDef(chord(DEAD_KEY_TRIGGERS[accent], "altgr"), accent, STANDALONE[accent])
        for accent in ACCENT_IDS
    )

    compose_table: dict = {}

    def rule(accent: str, c, output: str, extension: bool = False):
        compose_table[(accent, c)] = ComposeRule(accent, c, output, extension)

    for accent in ACCENT_IDS:
        mark = ACCENT_CODEPOINTS[accent]
        for v in "aeiou":
            rule(accent, chord(v), compose(ord(v), mark))
            # Uppercase accented forms go beyond the core inventory but
            # keep uppercase text typeable; hence extension entries.
            rule(accent, chord(v, "shift"), compose(ord(v.upper()), mark), extension=True)
        rule(accent, chord("e", "altgr"), chr(SCHWA) + chr(mark))
        rule(accent, chord("r", "altgr"), chr(SCHWA) + _RETRACT + chr(mark))
        rule(accent, chord("o", "altgr"), "o" + _RETRACT + chr(mark))
        rule(accent, chord("u", "altgr"), "u" + _RETRACT + chr(mark))
        rule(accent, chord("e", "altgr", "shift"), chr(CAPITAL_SCHWA) + chr(mark), extension=True)
        rule(accent, chord("r", "altgr", "shift"), chr(CAPITAL_SCHWA) + _RETRACT + chr(mark), extension=True)
        rule(accent, chord("o", "altgr", "shift"), "O" + _RETRACT + chr(mark), extension=True)
        rule(accent, chord("u", "altgr", "shift"), "U" + _RETRACT + chr(mark), extension=True)

    return Layout("Idu Azobra Desktop", "desktop", direct, dead_keys, compose_table, {})


def _strip(base_key: str, entries: list[str]) -> PopupStrip:
    return PopupStrip(base_key, tuple(entries))


def build_mobile_layout() -> Layout:
    """QWERTY mobile layout with long-press popup strips on the vowels."""
    marks = [ACCENT_CODEPOINTS[a] for a in ACCENT_IDS]

    def accented(base: str) -> list[str]:
        return [base + chr(m) for m in marks]

    def precomposed(v: str) -> list[str]:
        return [compose(ord(v), m) for m in marks]

    schwa = chr(SCHWA)
    cap_schwa = chr(CAPITAL_SCHWA)
    popups = {
        "a": _strip("a", precomposed("a")),
        "e": _strip("e", [schwa, schwa + _RETRACT]
                    + accented(schwa) + accented(schwa + _RETRACT)
                    + precomposed("e") + [cap_schwa, cap_schwa + _RETRACT]),
        "i": _strip("i", precomposed("i")),
        "o": _strip("o", ["o" + _RETRACT] + accented("o" + _RETRACT)
                    + precomposed("o") + ["O" + _RETRACT]),
        "u": _strip("u", ["u" + _RETRACT] + accented("u" + _RETRACT)
                    + precomposed("u") + ["U" + _RETRACT]),
    }
    return Layout("Idu Azobra Mobile", "mobile", {}, (), {}, popups)


def inventory_to_doc(forms: list[CharacterForm]) -> dict:
    return {
        "forms": [
            {"sequence": f.hex, "label": f.label, "category": f.category, "case": f.case}
            for f in forms
        ]
    }


def inventory_from_doc(doc: dict) -> tuple[CharacterForm, ...]:
    if not isinstance(doc, dict) or set(doc) != {"forms"}:
        raise ValueError("inventory: expected a single top-level 'forms' list")
    forms = []
    for entry in doc["forms"]:
        forms.append(
            CharacterForm(from_hex(entry["sequence"]), entry["label"],
                          entry["category"], entry["case"])
        )
    return tuple(forms)


def _data_text(name: str) -> str:
    return resources.files("azobra").joinpath("data", name).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def inventory() -> tuple[CharacterForm, ...]:
    """The shipped 44-form inventory, loaded from the data file."""
    return inventory_from_doc(json.loads(_data_text(INVENTORY_FILE)))


@lru_cache(maxsize=None)
def desktop_layout() -> Layout:
    return parse_layout(json.loads(_data_text(DESKTOP_FILE)))


@lru_cache(maxsize=None)
def mobile_layout() -> Layout:
    return parse_layout(json.loads(_data_text(MOBILE_FILE)))


def inventory_alphabet() -> str:
    """Every codepoint occurring in the shipped inventory, deduplicated."""
    seen: dict[str, None] = {}
    for form in inventory():
        for ch in form.sequence:
            seen.setdefault(ch, None)
    return "".join(seen)
