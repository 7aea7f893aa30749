"""Declarative keyboard layout model and its JSON file format.

A layout maps chords (key + modifier set) to output sequences, declares
dead keys for two-step accent composition, and, for mobile layouts,
long-press popup strips. Layout files are strict: unknown fields,
duplicate bindings, and non-canonical output sequences are rejected with
distinct errors rather than silently fixed, because the files are
community-maintained data and must fail loudly.

Codepoints in layout files are uppercase hex strings ("0259 0331") so
the files stay diff-auditable; see docs/layout-format.md.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .canonical import GRAVE, ACUTE, TILDE, MACRON, from_hex, is_canonical, to_hex
from .errors import (
    ChordConflictError,
    DuplicateChordError,
    NonCanonicalOutputError,
    PlatformError,
    SchemaError,
)

# Abstract key identifiers: letters and digits name themselves, symbol
# keys get word names so layout files never contain bare punctuation.
NAMED_KEYS = ("backtick", "apostrophe", "tilde", "hyphen", "space", "backspace")

KEY_CHARS = {
    "backtick": "`",
    "apostrophe": "'",
    "tilde": "~",
    "hyphen": "-",
    "space": " ",
}

CHAR_KEYS = {ch: name for name, ch in KEY_CHARS.items()}

LAYOUT_MODIFIERS = ("shift", "altgr")
ALL_MODIFIERS = ("shift", "altgr", "ctrl", "alt")

ACCENT_IDS = ("grave", "acute", "nasal", "macron")
ACCENT_CODEPOINTS = {
    "grave": GRAVE,
    "acute": ACUTE,
    "nasal": TILDE,
    "macron": MACRON,
}


def valid_key(key: str) -> bool:
    return (len(key) == 1 and (key.isascii() and (key.isalpha() or key.isdigit()))) or key in NAMED_KEYS


@dataclass(frozen=True)
class Chord:
    """One key pressed with a modifier set. Keys are case-insensitive."""

    key: str
    modifiers: frozenset[str] = frozenset()

    def token(self) -> str:
        """Replay-token style rendering, e.g. 'G-S-e'."""
        prefix = ""
        for mod, tag in (("ctrl", "C-"), ("alt", "A-"), ("altgr", "G-"), ("shift", "S-")):
            if mod in self.modifiers:
                prefix += tag
        key = KEY_CHARS.get(self.key, self.key)
        if self.key == "backspace":
            key = "BKSP"
        elif self.key == "space":
            key = "SPACE"
        return prefix + key


def chord(key: str, *modifiers: str) -> Chord:
    """Build a normalized Chord; lowercases the key id."""
    key = key.lower()
    if key in CHAR_KEYS:
        key = CHAR_KEYS[key]
    return Chord(key, frozenset(modifiers))


@dataclass(frozen=True)
class DeadKeyDef:
    """A dead-key trigger: arms an accent, commits nothing yet."""

    trigger: Chord
    accent: str
    standalone: str  # committed when composition fails or is cancelled


@dataclass(frozen=True)
class PopupStrip:
    """Ordered character variants shown on long-press of a base key."""

    base_key: str
    entries: tuple[str, ...]


@dataclass(frozen=True)
class ComposeRule:
    """One (armed accent, chord) -> output sequence rule."""

    accent: str
    chord: Chord
    output: str
    extension: bool = False  # True for forms beyond the core inventory


@dataclass(frozen=True)
class Layout:
    name: str
    platform: str  # "desktop" | "mobile"
    direct: dict[Chord, str] = field(default_factory=dict)
    dead_keys: tuple[DeadKeyDef, ...] = ()
    compose_table: dict[tuple[str, Chord], ComposeRule] = field(default_factory=dict)
    popups: dict[str, PopupStrip] = field(default_factory=dict)

    def dead_key_for(self, chord: Chord) -> DeadKeyDef | None:
        for dk in self.dead_keys:
            if dk.trigger == chord:
                return dk
        return None

    def standalone_for(self, accent: str) -> str:
        for dk in self.dead_keys:
            if dk.accent == accent:
                return dk.standalone
        raise KeyError(accent)

    def popup_for(self, base_key: str) -> PopupStrip | None:
        return self.popups.get(base_key.lower())


def popup_lookup(layout: Layout, base_key: str) -> PopupStrip | None:
    """Strip for a base key on a mobile layout; None when unmapped."""
    if layout.platform != "mobile":
        raise PlatformError(f"layout {layout.name!r} is not a mobile layout")
    return layout.popup_for(base_key)


# --- Parsing -------------------------------------------------------------

_TOP_FIELDS = {"name", "platform", "direct", "deadKeys", "composeTable", "popups"}


def _require_fields(entry: dict, required: set[str], optional: set[str], where: str):
    if not isinstance(entry, dict):
        raise SchemaError(f"{where}: expected an object")
    keys = set(entry)
    missing = required - keys
    unknown = keys - required - optional
    if missing:
        raise SchemaError(f"{where}: missing field(s) {sorted(missing)}")
    if unknown:
        raise SchemaError(f"{where}: unknown field(s) {sorted(unknown)}")


def _parse_chord(entry: dict, where: str) -> Chord:
    key = entry["key"]
    if not isinstance(key, str):
        raise SchemaError(f"{where}: key must be a string")
    normalized = CHAR_KEYS.get(key.lower(), key.lower())
    if not valid_key(normalized):
        raise SchemaError(f"{where}: bad key identifier {key!r}")
    mods = entry.get("modifiers", [])
    if not isinstance(mods, list) or not all(isinstance(m, str) for m in mods):
        raise SchemaError(f"{where}: modifiers must be a list of strings")
    for m in mods:
        if m not in LAYOUT_MODIFIERS:
            raise SchemaError(f"{where}: unsupported modifier {m!r}")
    return chord(key, *mods)


def _parse_output(value, where: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(f"{where}: output must be a hex codepoint string")
    try:
        text = from_hex(value)
    except ValueError:
        raise SchemaError(f"{where}: bad hex codepoint string {value!r}") from None
    if not text:
        raise SchemaError(f"{where}: empty output")
    if not is_canonical(text):
        raise NonCanonicalOutputError(
            f"{where}: output {to_hex(text)} is not in canonical order"
        )
    return text


def parse_layout(doc: dict) -> Layout:
    """Build a validated Layout from a parsed JSON document."""
    _require_fields(doc, {"name", "platform"}, _TOP_FIELDS, "layout")
    name = doc["name"]
    platform = doc["platform"]
    if not isinstance(name, str) or not name:
        raise SchemaError("layout: name must be a nonempty string")
    if platform not in ("desktop", "mobile"):
        raise SchemaError(f"layout: unknown platform {platform!r}")

    direct: dict[Chord, str] = {}
    for i, entry in enumerate(doc.get("direct", [])):
        where = f"direct[{i}]"
        _require_fields(entry, {"key", "output"}, {"modifiers"}, where)
        c = _parse_chord(entry, where)
        if c in direct:
            raise DuplicateChordError(f"{where}: chord {c.token()} already bound in direct")
        direct[c] = _parse_output(entry["output"], where)

    dead_keys: list[DeadKeyDef] = []
    triggers: set[Chord] = set()
    for i, entry in enumerate(doc.get("deadKeys", [])):
        where = f"deadKeys[{i}]"
        _require_fields(entry, {"key", "accent", "standalone"}, {"modifiers"}, where)
        c = _parse_chord(entry, where)
        accent = entry["accent"]
        if accent not in ACCENT_IDS:
            raise SchemaError(f"{where}: unknown accent {accent!r}")
        if c in triggers:
            raise DuplicateChordError(f"{where}: chord {c.token()} already a dead key")
        if c in direct:
            raise ChordConflictError(
                f"{where}: chord {c.token()} bound in both direct and deadKeys"
            )
        triggers.add(c)
        dead_keys.append(DeadKeyDef(c, accent, _parse_output(entry["standalone"], where)))

    compose_table: dict[tuple[str, Chord], ComposeRule] = {}
    for i, entry in enumerate(doc.get("composeTable", [])):
        where = f"composeTable[{i}]"
        _require_fields(entry, {"accent", "key", "output"}, {"modifiers", "extension"}, where)
        accent = entry["accent"]
        if accent not in ACCENT_IDS:
            raise SchemaError(f"{where}: unknown accent {accent!r}")
        c = _parse_chord(entry, where)
        ext = entry.get("extension", False)
        if not isinstance(ext, bool):
            raise SchemaError(f"{where}: extension must be a boolean")
        if (accent, c) in compose_table:
            raise DuplicateChordError(
                f"{where}: compose key ({accent}, {c.token()}) already bound"
            )
        compose_table[(accent, c)] = ComposeRule(
            accent, c, _parse_output(entry["output"], where), ext
        )

    popups: dict[str, PopupStrip] = {}
    for i, entry in enumerate(doc.get("popups", [])):
        where = f"popups[{i}]"
        _require_fields(entry, {"key", "entries"}, set(), where)
        key = entry["key"]
        if not isinstance(key, str) or not valid_key(key.lower()):
            raise SchemaError(f"{where}: bad key identifier {key!r}")
        key = key.lower()
        if key in popups:
            raise DuplicateChordError(f"{where}: popup for {key!r} already defined")
        entries = entry["entries"]
        if not isinstance(entries, list) or not entries:
            raise SchemaError(f"{where}: entries must be a nonempty list")
        seqs = []
        for j, e in enumerate(entries):
            seq = _parse_output(e, f"{where}.entries[{j}]")
            if seq in seqs:
                raise SchemaError(
                    f"{where}: duplicate entry {to_hex(seq)} in strip for {key!r}"
                )
            seqs.append(seq)
        popups[key] = PopupStrip(key, tuple(seqs))

    if platform == "desktop" and popups:
        raise SchemaError("layout: desktop layouts must not define popups")
    if platform == "mobile" and (dead_keys or compose_table):
        raise SchemaError("layout: mobile layouts must not define deadKeys or composeTable")

    return Layout(name, platform, direct, tuple(dead_keys), compose_table, popups)


def load_layout(text: str) -> Layout:
    """Parse and validate a layout from JSON text."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"layout: invalid JSON: {exc}") from None
    return parse_layout(doc)


def load_layout_file(path) -> Layout:
    with open(path, encoding="utf-8") as fh:
        return load_layout(fh.read())


# --- Serialization -------------------------------------------------------

def _chord_fields(c: Chord) -> dict:
    out: dict = {"key": c.key}
    if c.modifiers:
        out["modifiers"] = sorted(c.modifiers)
    return out


def _chord_sort_key(c: Chord):
    return (c.key, sorted(c.modifiers))


def layout_to_doc(layout: Layout) -> dict:
    """Serialize a Layout back to its JSON document form.

    Entries are emitted in a deterministic sorted order so regenerated
    files diff cleanly.
    """
    doc: dict = {"name": layout.name, "platform": layout.platform}
    doc["direct"] = [
        {**_chord_fields(c), "output": to_hex(out)}
        for c, out in sorted(layout.direct.items(), key=lambda kv: _chord_sort_key(kv[0]))
    ]
    doc["deadKeys"] = [
        {**_chord_fields(dk.trigger), "accent": dk.accent, "standalone": to_hex(dk.standalone)}
        for dk in layout.dead_keys
    ]
    compose = []
    for (accent, c), rule in sorted(
        layout.compose_table.items(),
        key=lambda kv: (ACCENT_IDS.index(kv[0][0]), _chord_sort_key(kv[0][1])),
    ):
        entry = {"accent": accent, **_chord_fields(c), "output": to_hex(rule.output)}
        if rule.extension:
            entry["extension"] = True
        compose.append(entry)
    doc["composeTable"] = compose
    doc["popups"] = [
        {"key": key, "entries": [to_hex(e) for e in strip.entries]}
        for key, strip in sorted(layout.popups.items())
    ]
    return doc


def layout_to_json(layout: Layout) -> str:
    return json.dumps(layout_to_doc(layout), indent=2, ensure_ascii=True) + "\n"
