#!/usr/bin/env python3
"""Regenerate the golden replay-script suite under goldens/.

The suite has three parts: the worked desktop examples, one generated
script per inventory form (desktop chords and mobile popups), and
hand-written flow scripts for dead-key edge cases, backspace modes, and
pass-through. goldens/manifest.json records which layout and backspace
unit each script runs with; tests/test_goldens.py replays everything and
fails if the generated files drift from the builders.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from azobra.layout import Layout  # noqa: E402
from azobra.shipped import desktop_layout, inventory, mobile_layout  # noqa: E402

WORKED = {
    # The desktop layout's documented behaviors, one script each.
    "worked/altgr_e.txt": 'G-e #expect "0259"\n',
    "worked/altgr_r.txt": 'G-r #expect "0259 0331"\n',
    "worked/altgr_o.txt": 'G-o #expect "006F 0331"\n',
    "worked/altgr_u.txt": 'G-u #expect "0075 0331"\n',
    "worked/tilde_then_altgr_e.txt": 'G-~ G-e #expect "0259 0303"\n',
    "worked/grave_then_altgr_r.txt": 'G-` G-r #expect "0259 0331 0300"\n',
}

FLOWS = {
    "flows/backspace_grapheme.txt": (
        "# one backspace removes a whole composed character\n"
        'G-` G-r #expect "0259 0331 0300"\n'
        'BKSP #expect ""\n'
    ),
    "flows/backspace_codepoint.txt": (
        "# legacy hosts delete one codepoint per press\n"
        'G-` G-r #expect "0259 0331 0300"\n'
        'BKSP #expect "0259 0331"\n'
        'BKSP #expect "0259"\n'
        'BKSP #expect ""\n'
    ),
    "flows/standalone_accents.txt": (
        "# double-pressing a dead key commits its spacing character\n"
        'G-` G-` #expect "0060"\n'
        'G-\' G-\' #expect "0060 00B4"\n'
        'G-~ G-~ #expect "0060 00B4 007E"\n'
        'G-- G-- #expect "0060 00B4 007E 00AF"\n'
        "# space commits the pending accent too\n"
        'G-` SPACE #expect "0060 00B4 007E 00AF 0060"\n'
    ),
    "flows/failed_composition.txt": (
        "# an uncomposable key commits the accent, then types normally\n"
        'G-\' z #expect "00B4 007A"\n'
        'G-~ 5 #expect "00B4 007A 007E 0035"\n'
    ),
    "flows/cancel_composition.txt": (
        "# backspace while an accent is pending cancels it, deletes nothing\n"
        'a G-` BKSP b #expect "0061 0062"\n'
    ),
    "flows/switch_dead_key.txt": (
        "# a second, different dead key commits the first standalone and re-arms\n"
        'G-` G-~ e #expect "0060 1EBD"\n'
    ),
    "flows/passthrough_shortcuts.txt": (
        "# plain typing and shortcuts are untouched\n"
        'h i SPACE S-a C-c #expect "0068 0069 0020 0041"\n'
        'BKSP #expect "0068 0069 0020"\n'
    ),
    "flows/uppercase_extensions.txt": (
        "# shifted compose entries for uppercase accented forms\n"
        'G-` S-a #expect "00C0"\n'
        'G-\' G-S-e #expect "00C0 018F 0301"\n'
        'G-- G-S-r #expect "00C0 018F 0301 018F 0331 0304"\n'
    ),
    "flows/mobile_popup_basics.txt": (
        "# long-press selections commit; plain taps type plain letters\n"
        'POPUP e 0 #expect "0259"\n'
        'POPUP e 1 #expect "0259 0259 0331"\n'
        'b a #expect "0259 0259 0331 0062 0061"\n'
        'BKSP BKSP BKSP #expect "0259"\n'
    ),
}


def slug(label: str) -> str:
    return label.replace(" ", "-")


def desktop_tokens(layout: Layout, sequence: str) -> list[str]:
    for chord, output in layout.direct.items():
        if output == sequence:
            return [chord.token()]
    for (accent, chord), rule in layout.compose_table.items():
        if rule.output == sequence and not rule.extension:
            trigger = next(dk.trigger for dk in layout.dead_keys if dk.accent == accent)
            return [trigger.token(), chord.token()]
    raise SystemExit(f"no desktop chords produce {sequence!r}")


def form_scripts() -> dict[str, str]:
    """One desktop script per inventory form, plus one mobile sweep."""
    desktop = desktop_layout()
    mobile = mobile_layout()
    scripts: dict[str, str] = {}
    for form in inventory():
        tokens = desktop_tokens(desktop, form.sequence)
        scripts[f"forms/{slug(form.label)}.txt"] = (
            f'{" ".join(tokens)} #expect "{form.hex}"\n'
        )

    lines = ["# every inventory form via its popup strip, one running buffer"]
    buffer_hex: list[str] = []
    for form in inventory():
        home = None
        for key, strip in sorted(mobile.popups.items()):
            if form.sequence in strip.entries:
                home = (key, strip.entries.index(form.sequence))
                break
        if home is None:
            raise SystemExit(f"form {form.label!r} has no popup home")
        buffer_hex.append(form.hex)
        lines.append(f'POPUP {home[0]} {home[1]} #expect "{" ".join(buffer_hex)}"')
    scripts["forms/mobile_all_forms.txt"] = "\n".join(lines) + "\n"
    return scripts


def main() -> int:
    goldens = ROOT / "goldens"
    files: dict[str, str] = {}
    files.update(WORKED)
    files.update(FLOWS)
    files.update(form_scripts())

    manifest = []
    for name in sorted(files):
        if name == "flows/backspace_codepoint.txt":
            unit = "codepoint"
        else:
            unit = "grapheme"
        layout = "mobile" if "mobile" in name else "desktop"
        manifest.append({"script": name, "layout": layout, "backspaceUnit": unit})
    files["manifest.json"] = json.dumps(manifest, indent=2) + "\n"

    for name, text in files.items():
        path = goldens / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    print(f"wrote {len(files)} files under {goldens.relative_to(ROOT)}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
