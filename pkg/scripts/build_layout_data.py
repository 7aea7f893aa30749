#!/usr/bin/env python3
"""Regenerate the shipped data files from their programmatic builders.

Writes src/azobra/data/{inventory,desktop,mobile}.json. The files are
version-controlled; run this after editing the builders in
azobra.shipped and commit the diff. tests/test_shipped_data.py fails
when files and builders disagree.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from azobra.layout import layout_to_doc  # noqa: E402
from azobra.shipped import (  # noqa: E402
    DESKTOP_FILE,
    INVENTORY_FILE,
    MOBILE_FILE,
    build_desktop_layout,
    build_inventory,
    build_mobile_layout,
    inventory_to_doc,
)


def dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def main() -> int:
    data_dir = ROOT / "src" / "azobra" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    files = {
        INVENTORY_FILE: dump(inventory_to_doc(build_inventory())),
        DESKTOP_FILE: dump(layout_to_doc(build_desktop_layout())),
        MOBILE_FILE: dump(layout_to_doc(build_mobile_layout())),
    }
    for name, text in files.items():
        path = data_dir / name
        old = path.read_text(encoding="utf-8") if path.exists() else None
        path.write_text(text, encoding="utf-8")
        print(f"{'updated ' if old not in (None, text) else 'wrote   '}{path.relative_to(ROOT)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
