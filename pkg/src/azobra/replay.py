"""Keystroke replay scripts with golden expectations.

Scripts are plain text, diff-friendly, and compare documents as hex
codepoint sequences, never rendered glyphs. Grammar (whitespace
separated, per line):

    G-S-e          key token: optional C-/A-/G-/S- prefixes (ctrl, alt,
                   altgr, shift), then a literal key. Single characters
                   name letter/digit/symbol keys; BKSP and SPACE name
                   backspace and space.
    POPUP e 0      mobile long-press selection: base key and strip index
    #expect "0259 0331"
                   assert the document equals these codepoints (empty
                   string for an empty document)
    # anything else after '#' is a comment

See docs/replay-format.md.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .canonical import from_hex, to_hex
from .engine import EngineState, KeyEvent, apply_commands, process, select_popup
from .errors import AzobraError, ReplayParseError
from .layout import CHAR_KEYS, Layout, chord, valid_key

_PREFIXES = {"C-": "ctrl", "A-": "alt", "G-": "altgr", "S-": "shift"}
_NAMED_TOKENS = {"BKSP": "backspace", "SPACE": "space"}
_EXPECT_RE = re.compile(r'^expect\s+"([0-9A-Fa-f \t]*)"\s*$')


@dataclass(frozen=True)
class Step:
    kind: str  # "key" | "popup" | "expect"
    line: int
    event: KeyEvent | None = None
    base_key: str = ""
    index: int = 0
    expected: str = ""


@dataclass
class ExpectationResult:
    line: int
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass
class ReplayResult:
    final_document: str = ""
    checks: list[ExpectationResult] = field(default_factory=list)
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error and all(c.ok for c in self.checks)


def parse_key_token(token: str, line: int) -> KeyEvent:
    mods = []
    rest = token
    while len(rest) > 2 and rest[:2] in _PREFIXES:
        mods.append(_PREFIXES[rest[:2]])
        rest = rest[2:]
    if rest in _NAMED_TOKENS:
        key = _NAMED_TOKENS[rest]
    elif len(rest) == 1:
        key = CHAR_KEYS.get(rest, rest.lower())
    else:
        raise ReplayParseError(line, f"unknown key token {token!r}")
    if not valid_key(key):
        raise ReplayParseError(line, f"unknown key token {token!r}")
    return KeyEvent(chord(key, *mods))


def parse_script(text: str) -> list[Step]:
    steps: list[Step] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        hash_pos = line.find("#")
        directive = ""
        if hash_pos >= 0:
            directive = line[hash_pos + 1:].strip()
            line = line[:hash_pos]
        tokens = line.split()
        i = 0
        while i < len(tokens):
            tok = tokens[i]
            if tok == "POPUP":
                if i + 2 >= len(tokens):
                    raise ReplayParseError(lineno, "POPUP needs a key and an index")
                base_key, idx = tokens[i + 1], tokens[i + 2]
                if not idx.isdigit():
                    raise ReplayParseError(lineno, f"bad POPUP index {idx!r}")
                steps.append(Step("popup", lineno, base_key=base_key.lower(), index=int(idx)))
                i += 3
            else:
                steps.append(Step("key", lineno, event=parse_key_token(tok, lineno)))
                i += 1
        if re.match(r"expect(\s|$)", directive):
            m = _EXPECT_RE.match(directive)
            if not m:
                raise ReplayParseError(lineno, "malformed #expect directive")
            expected_hex = m.group(1).split()
            steps.append(Step("expect", lineno,
                              expected=from_hex(" ".join(expected_hex))))
        # any other text after '#' is a comment
    return steps


def run_script(layout: Layout, steps: list[Step], backspace_unit: str = "grapheme") -> ReplayResult:
    """Replay steps against a fresh engine; fail fast on first mismatch."""
    state = EngineState(layout, backspace_unit=backspace_unit)
    document = ""
    result = ReplayResult()
    for step in steps:
        if step.kind == "key":
            state, commands = process(state, step.event)
            document = apply_commands(document, commands, step.event)
        elif step.kind == "popup":
            try:
                state, commands = select_popup(state, step.base_key, step.index)
            except AzobraError as exc:
                result.error = f"line {step.line}: {exc}"
                result.final_document = document
                return result
            document = apply_commands(document, commands)
        else:
            check = ExpectationResult(step.line, step.expected, document)
            result.checks.append(check)
            if not check.ok:
                break
    result.final_document = document
    return result


def diff_expectation(check: ExpectationResult) -> str:
    """Codepoint-level diff of an expectation failure."""
    exp = check.expected
    act = check.actual
    lines = [
        f"expected: {to_hex(exp) or '(empty)'}",
        f"actual:   {to_hex(act) or '(empty)'}",
    ]
    for i in range(max(len(exp), len(act))):
        e = f"U+{ord(exp[i]):04X}" if i < len(exp) else "(end)"
        a = f"U+{ord(act[i]):04X}" if i < len(act) else "(end)"
        if e != a:
            lines.append(f"  first difference at codepoint {i}: expected {e}, got {a}")
            break
    return "\n".join(lines)
