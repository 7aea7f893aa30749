"""Input-method composition engine for the Idu Azobra orthography.

Core pieces: canonical codepoint operations (`canonical`), the keyboard
layout model and file format (`layout`), the keystroke state machine
(`engine`), the shipped inventory and layouts (`shipped`), and the
validation/replay/repair toolchain behind the ``azobra`` CLI.
"""

from .canonical import (
    CharacterForm,
    combining_class,
    compose,
    decompose,
    from_hex,
    grapheme_split,
    is_canonical,
    repair_order,
    to_hex,
)
from .engine import EditCommand, EngineState, KeyEvent, apply_commands, process, select_popup
from .layout import Chord, Layout, chord, load_layout, load_layout_file, popup_lookup
from .shipped import desktop_layout, inventory, mobile_layout

__version__ = "0.1.0"

__all__ = [
    "CharacterForm",
    "Chord",
    "EditCommand",
    "EngineState",
    "KeyEvent",
    "Layout",
    "apply_commands",
    "chord",
    "combining_class",
    "compose",
    "decompose",
    "desktop_layout",
    "from_hex",
    "grapheme_split",
    "inventory",
    "is_canonical",
    "load_layout",
    "load_layout_file",
    "mobile_layout",
    "popup_lookup",
    "process",
    "repair_order",
    "select_popup",
    "to_hex",
]
