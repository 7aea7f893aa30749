#!/usr/bin/env python3
"""Export layouts and golden-replay results for the browser tester.

Writes frontend/fixtures/: copies of the shipped layout/inventory JSON
(the UI loads them unmodified) and goldens.json, which pairs every
golden script with the documents the Python replay harness produced.
The frontend test suite replays the same scripts through the TypeScript
engine and must match these buffers bit-exactly.
"""

import json
import shutil
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from azobra.canonical import to_hex  # noqa: E402
from azobra.replay import parse_script, run_script  # noqa: E402
from azobra.shipped import desktop_layout, mobile_layout  # noqa: E402

DATA = ROOT / "src" / "azobra" / "data"
GOLDENS = ROOT / "goldens"
OUT = ROOT / "frontend" / "fixtures"


def main() -> int:
    OUT.mkdir(parents=True, exist_ok=True)
    for name in ("inventory.json", "desktop.json", "mobile.json"):
        shutil.copyfile(DATA / name, OUT / name)

    layouts = {"desktop": desktop_layout(), "mobile": mobile_layout()}
    manifest = json.loads((GOLDENS / "manifest.json").read_text(encoding="utf-8"))
    entries = []
    for item in manifest:
        text = (GOLDENS / item["script"]).read_text(encoding="utf-8")
        steps = parse_script(text)
        result = run_script(layouts[item["layout"]], steps, item["backspaceUnit"])
        if not result.ok:
            raise SystemExit(f"golden {item['script']} does not pass: {result.error}")
        entries.append({
            "name": item["script"],
            "layout": item["layout"],
            "backspaceUnit": item["backspaceUnit"],
            "script": text,
            "expectations": [
                {"line": c.line, "hex": to_hex(c.actual)} for c in result.checks
            ],
            "finalHex": to_hex(result.final_document),
        })

    (OUT / "goldens.json").write_text(
        json.dumps(entries, indent=2) + "\n", encoding="utf-8"
    )
    print(f"wrote {len(entries)} golden fixtures + 3 data copies to {OUT.relative_to(ROOT)}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
