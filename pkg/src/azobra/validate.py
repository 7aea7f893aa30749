"""Layout validation: coverage, conflicts, ordering, keystroke cost.

Unlike the strict loader in `layout`, validation reads a layout document
leniently and collects every finding instead of stopping at the first,
so a community layout author sees the whole damage report at once.
Findings are sorted for deterministic output; an empty report means the
layout ships.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .canonical import CharacterForm, from_hex, is_canonical, to_hex
from .errors import SchemaError
from .layout import ACCENT_IDS, Chord, chord
from .shipped import inventory_from_doc

_MOBILE_SELECTION_COST = 1  # one long-press selection


@dataclass(frozen=True)
class ValidationReport:
    layout_name: str
    platform: str
    missing: tuple[str, ...] = ()
    conflicts: tuple[str, ...] = ()
    ordering_violations: tuple[str, ...] = ()
    cost: dict[str, int] = field(default_factory=dict)  # form label -> min keystrokes

    @property
    def ok(self) -> bool:
        return not (self.missing or self.conflicts or self.ordering_violations)


def _chord_of(entry: dict, where: str) -> Chord:
    key = entry.get("key")
    if not isinstance(key, str):
        raise SchemaError(f"{where}: key must be a string")
    mods = entry.get("modifiers", [])
    if not isinstance(mods, list):
        raise SchemaError(f"{where}: modifiers must be a list")
    return chord(key, *mods)


def _parse_hex(value, where: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(f"{where}: expected a hex codepoint string")
    try:
        return from_hex(value)
    except ValueError:
        raise SchemaError(f"{where}: bad hex codepoint string {value!r}") from None


def validate_layout_doc(doc: dict, forms: tuple[CharacterForm, ...]) -> ValidationReport:
    """Validate a parsed layout document against an inventory.

    Raises SchemaError only for documents too malformed to interpret;
    duplicate bindings, conflicts, non-canonical outputs, and coverage
    gaps all land in the report instead.
    """
    if not isinstance(doc, dict):
        raise SchemaError("layout: expected a JSON object")
    name = doc.get("name")
    platform = doc.get("platform")
    if not isinstance(name, str) or platform not in ("desktop", "mobile"):
        raise SchemaError("layout: missing or invalid name/platform")

    conflicts: list[str] = []
    ordering: list[str] = []
    reachable: dict[str, int] = {}  # output sequence -> min keystrokes

    def check_order(seq: str, where: str):
        if not is_canonical(seq):
            ordering.append(f"{where}: {to_hex(seq)} not in canonical order")

    direct_chords: set[Chord] = set()
    for i, entry in enumerate(doc.get("direct", [])):
        where = f"direct[{i}]"
        c = _chord_of(entry, where)
        seq = _parse_hex(entry.get("output"), where)
        if c in direct_chords:
            conflicts.append(f"{where}: duplicate chord {c.token()} in direct")
        direct_chords.add(c)
        check_order(seq, f"{where} ({c.token()})")
        reachable[seq] = min(reachable.get(seq, 99), 1)

    dead_triggers: dict[Chord, str] = {}
    dead_accents: set[str] = set()
    for i, entry in enumerate(doc.get("deadKeys", [])):
        where = f"deadKeys[{i}]"
        c = _chord_of(entry, where)
        accent = entry.get("accent")
        if accent not in ACCENT_IDS:
            raise SchemaError(f"{where}: unknown accent {accent!r}")
        seq = _parse_hex(entry.get("standalone"), where)
        if c in dead_triggers:
            conflicts.append(f"{where}: duplicate dead-key trigger {c.token()}")
        if c in direct_chords:
            conflicts.append(f"{where}: chord {c.token()} bound in both direct and deadKeys")
        dead_triggers[c] = accent
        dead_accents.add(accent)
        check_order(seq, f"{where} ({c.token()})")

    compose_keys: set[tuple[str, Chord]] = set()
    for i, entry in enumerate(doc.get("composeTable", [])):
        where = f"composeTable[{i}]"
        accent = entry.get("accent")
        if accent not in ACCENT_IDS:
            raise SchemaError(f"{where}: unknown accent {accent!r}")
        c = _chord_of(entry, where)
        seq = _parse_hex(entry.get("output"), where)
        if (accent, c) in compose_keys:
            conflicts.append(f"{where}: duplicate compose key ({accent}, {c.token()})")
        compose_keys.add((accent, c))
        check_order(seq, f"{where} ({accent}, {c.token()})")
        # Composing takes the dead key press plus this chord; only
        # reachable when some dead key arms the accent.
        if accent in dead_accents:
            reachable[seq] = min(reachable.get(seq, 99), 2)

    popup_keys: set[str] = set()
    for i, entry in enumerate(doc.get("popups", [])):
        where = f"popups[{i}]"
        key = entry.get("key")
        if not isinstance(key, str):
            raise SchemaError(f"{where}: key must be a string")
        key = key.lower()
        if key in popup_keys:
            conflicts.append(f"{where}: duplicate popup strip for {key!r}")
        popup_keys.add(key)
        entries = entry.get("entries")
        if not isinstance(entries, list):
            raise SchemaError(f"{where}: entries must be a list")
        seen: set[str] = set()
        for j, e in enumerate(entries):
            seq = _parse_hex(e, f"{where}.entries[{j}]")
            if seq in seen:
                conflicts.append(f"{where}: duplicate entry {to_hex(seq)} in strip {key!r}")
            seen.add(seq)
            check_order(seq, f"{where}.entries[{j}]")
            reachable[seq] = min(reachable.get(seq, 99), _MOBILE_SELECTION_COST)

    missing: list[str] = []
    cost: dict[str, int] = {}
    for form in forms:
        best = reachable.get(form.sequence)
        if best is None:
            missing.append(f"{form.label} ({form.hex})")
        else:
            cost[form.label] = best

    return ValidationReport(
        layout_name=name,
        platform=platform,
        missing=tuple(sorted(missing)),
        conflicts=tuple(sorted(conflicts)),
        ordering_violations=tuple(sorted(ordering)),
        cost=cost,
    )


def validate_files(layout_path, inventory_path) -> tuple[ValidationReport, tuple[CharacterForm, ...]]:
    with open(layout_path, encoding="utf-8") as fh:
        doc = json.load(fh)
    with open(inventory_path, encoding="utf-8") as fh:
        forms = inventory_from_doc(json.load(fh))
    return validate_layout_doc(doc, forms), forms


def format_report(report: ValidationReport, forms: tuple[CharacterForm, ...]) -> str:
    lines = [
        f"layout: {report.layout_name} ({report.platform})",
        f"inventory forms: {len(forms)}",
        f"missing: {len(report.missing)}",
    ]
    lines += [f"  {m}" for m in report.missing]
    lines.append(f"conflicts: {len(report.conflicts)}")
    lines += [f"  {c}" for c in report.conflicts]
    lines.append(f"ordering violations: {len(report.ordering_violations)}")
    lines += [f"  {o}" for o in report.ordering_violations]
    if report.cost:
        lines.append(f"max keystrokes: {max(report.cost.values())}")
    lines.append("result: " + ("ok" if report.ok else "FINDINGS"))
    return "\n".join(lines)
