"""Keystroke state machine turning key events into edit commands.

The engine is platform-agnostic: a host (CLI replay harness, browser
tester, a real OS hook) feeds it KeyEvents and executes the EditCommands
it returns against its own text field. The engine holds no document; its
only state is the active layout, the pending dead-key accent, and the
configured backspace granularity, so `process` is a pure function of
(state, event).

Rules, in order:

* key releases and chords with modifiers other than shift/altgr pass
  through untouched, so shortcuts and plain typing are unaffected;
* with no accent pending: direct-mapped chords commit their sequence,
  dead-key triggers arm an accent, backspace becomes a delete command,
  anything else passes through;
* with an accent pending: a compose-table hit commits the composed
  sequence; pressing the same dead key again or space commits the
  accent's standalone spacing character; backspace cancels silently;
  any other chord commits the standalone and is then handled as if no
  accent were pending.

Every committed sequence comes from layout data validated canonical at
load time, so engine output is always in canonical combining order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .canonical import grapheme_split
from .errors import NoPopupError, PlatformError, PopupIndexError
from .layout import KEY_CHARS, Chord, Layout

TEXT_MODIFIERS = frozenset(("shift", "altgr"))

GRAPHEME = "grapheme"
CODEPOINT = "codepoint"


@dataclass(frozen=True)
class KeyEvent:
    chord: Chord
    direction: str = "press"  # "press" | "release"


@dataclass(frozen=True)
class EditCommand:
    kind: str  # pass_through | suppress | commit | delete_backward
    text: str = ""
    count: int = 0
    unit: str = ""


PASS_THROUGH = EditCommand("pass_through")
SUPPRESS = EditCommand("suppress")


def commit(text: str) -> EditCommand:
    return EditCommand("commit", text=text)


def delete_backward(count: int = 1, unit: str = GRAPHEME) -> EditCommand:
    return EditCommand("delete_backward", count=count, unit=unit)


@dataclass(frozen=True)
class EngineState:
    layout: Layout
    pending: str | None = None  # armed accent id, at most one
    backspace_unit: str = GRAPHEME


def process(state: EngineState, event: KeyEvent) -> tuple[EngineState, list[EditCommand]]:
    """Consume one key event; returns the new state and edit commands."""
    if event.direction != "press":
        return state, [PASS_THROUGH]
    chord = event.chord
    if chord.modifiers - TEXT_MODIFIERS:
        # Ctrl/Alt shortcuts stay invisible to composition.
        return state, [PASS_THROUGH]

    if state.pending is None:
        return _process_idle(state, chord)

    rule = state.layout.compose_table.get((state.pending, chord))
    standalone = state.layout.standalone_for(state.pending)
    cleared = replace(state, pending=None)
    if rule is not None:
        return cleared, [SUPPRESS, commit(rule.output)]
    dead = state.layout.dead_key_for(chord)
    if dead is not None and dead.accent == state.pending:
        return cleared, [SUPPRESS, commit(standalone)]
    if chord.key == "space":
        return cleared, [SUPPRESS, commit(standalone)]
    if chord.key == "backspace":
        return cleared, [SUPPRESS]
    # Failed composition: emit the standalone accent, then treat the
    # chord as if nothing had been pending (it may arm another accent).
    new_state, cmds = _process_idle(cleared, chord)
    return new_state, [commit(standalone)] + cmds


def _process_idle(state: EngineState, chord: Chord) -> tuple[EngineState, list[EditCommand]]:
    output = state.layout.direct.get(chord)
    if output is not None:
        return state, [SUPPRESS, commit(output)]
    dead = state.layout.dead_key_for(chord)
    if dead is not None:
        return replace(state, pending=dead.accent), [SUPPRESS]
    if chord.key == "backspace" and chord.modifiers <= frozenset(("shift",)):
        return state, [SUPPRESS, delete_backward(1, state.backspace_unit)]
    return state, [PASS_THROUGH]


def select_popup(state: EngineState, base_key: str, index: int) -> tuple[EngineState, list[EditCommand]]:
    """Commit one entry from a long-press popup strip (mobile only)."""
    if state.layout.platform != "mobile":
        raise PlatformError(f"layout {state.layout.name!r} has no popup strips")
    strip = state.layout.popup_for(base_key)
    if strip is None:
        raise NoPopupError(f"no popup strip for key {base_key!r}")
    if not 0 <= index < len(strip.entries):
        raise PopupIndexError(
            f"index {index} outside strip for {base_key!r} (length {len(strip.entries)})"
        )
    return state, [commit(strip.entries[index])]


def typed_text(event: KeyEvent | None) -> str:
    """Plain text a pass-through press would type in a host text field."""
    if event is None or event.direction != "press":
        return ""
    chord = event.chord
    if chord.modifiers - frozenset(("shift",)):
        return ""
    char = chord.key if len(chord.key) == 1 else KEY_CHARS.get(chord.key, "")
    if not char:
        return ""
    if "shift" in chord.modifiers:
        return char.upper()
    return char


def apply_commands(document: str, commands: list[EditCommand], event: KeyEvent | None = None) -> str:
    """Simulated host text field: apply edit commands to a document."""
    for cmd in commands:
        if cmd.kind == "commit":
            document += cmd.text
        elif cmd.kind == "pass_through":
            document += typed_text(event)
        elif cmd.kind == "delete_backward":
            document = _delete_backward(document, cmd.count, cmd.unit)
        # suppress: nothing reaches the document
    return document


def _delete_backward(document: str, count: int, unit: str) -> str:
    for _ in range(count):
        if not document:
            break
        if unit == CODEPOINT:
            document = document[:-1]
        else:
            clusters = grapheme_split(document)
            document = "".join(clusters[:-1])
    return document
