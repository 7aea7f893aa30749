"""Host embedding boundary: the engine behind JSON messages.

Hosts that cannot link Python directly (the browser typing tester, a
replay driver in another language) talk to the engine through the
message schema documented in docs/embedding-protocol.md: load a layout,
feed key events, select popup entries. Commit payloads travel as hex
codepoint strings so transports can never mangle the text.

The schema is shared verbatim with the browser tester, whose own engine
implementation must stay bit-identical; the golden-script fixtures keep
both sides honest.
"""

from __future__ import annotations

import json

from .canonical import to_hex
from .engine import EditCommand, EngineState, KeyEvent, process, select_popup
from .errors import AzobraError, LayoutError, NoPopupError, PlatformError, PopupIndexError
from .layout import chord, parse_layout


def command_to_message(cmd: EditCommand) -> dict:
    if cmd.kind == "commit":
        return {"kind": "commit", "text": to_hex(cmd.text)}
    if cmd.kind == "delete_backward":
        return {"kind": "delete_backward", "count": cmd.count, "unit": cmd.unit}
    return {"kind": cmd.kind}


def _error(code: str, message: str) -> dict:
    return {"ok": False, "error": {"code": code, "message": message}}


class EngineHost:
    """One input session driven by JSON-serializable messages."""

    def __init__(self):
        self._state: EngineState | None = None
        self._unit = "grapheme"

    def handle(self, message: dict) -> dict:
        op = message.get("op")
        handler = getattr(self, f"_op_{op}", None) if isinstance(op, str) else None
        if handler is None:
            return _error("unknown_op", f"unknown op {op!r}")
        try:
            return handler(message)
        except AzobraError as exc:
            return _error(_code_for(exc), str(exc))

    def handle_line(self, line: str) -> str:
        try:
            message = json.loads(line)
        except json.JSONDecodeError as exc:
            return json.dumps(_error("bad_json", str(exc)))
        return json.dumps(self.handle(message))

    def _op_load_layout(self, message: dict) -> dict:
        layout = parse_layout(message.get("layout", {}))
        self._unit = message.get("backspaceUnit", self._unit)
        self._state = EngineState(layout, backspace_unit=self._unit)
        return {"ok": True, "name": layout.name, "platform": layout.platform}

    def _op_reset(self, message: dict) -> dict:
        if self._state is None:
            return _error("no_layout", "no layout loaded")
        self._state = EngineState(self._state.layout, backspace_unit=self._unit)
        return {"ok": True}

    def _op_set_backspace_unit(self, message: dict) -> dict:
        unit = message.get("unit")
        if unit not in ("grapheme", "codepoint"):
            return _error("bad_unit", f"unknown backspace unit {unit!r}")
        self._unit = unit
        if self._state is not None:
            self._state = EngineState(self._state.layout, self._state.pending, unit)
        return {"ok": True}

    def _op_key_event(self, message: dict) -> dict:
        if self._state is None:
            return _error("no_layout", "no layout loaded")
        key = message.get("key")
        if not isinstance(key, str):
            return _error("bad_event", "key must be a string")
        mods = message.get("modifiers", [])
        direction = message.get("direction", "press")
        event = KeyEvent(chord(key, *mods), direction)
        self._state, commands = process(self._state, event)
        return {
            "ok": True,
            "commands": [command_to_message(c) for c in commands],
            "pending": self._state.pending,
        }

    def _op_select_popup(self, message: dict) -> dict:
        if self._state is None:
            return _error("no_layout", "no layout loaded")
        key = message.get("key")
        index = message.get("index")
        if not isinstance(key, str) or not isinstance(index, int):
            return _error("bad_event", "select_popup needs a key and an integer index")
        self._state, commands = select_popup(self._state, key, index)
        return {
            "ok": True,
            "commands": [command_to_message(c) for c in commands],
            "pending": self._state.pending,
        }


def _code_for(exc: AzobraError) -> str:
    if isinstance(exc, LayoutError):
        return "layout_error"
    if isinstance(exc, PlatformError):
        return "not_mobile"
    if isinstance(exc, NoPopupError):
        return "no_popup"
    if isinstance(exc, PopupIndexError):
        return "bad_index"
    return "engine_error"
