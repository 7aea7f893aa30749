"""The committed frontend fixtures stay in sync with data and goldens."""

import json
from pathlib import Path

import pytest

from azobra.canonical import to_hex
from azobra.replay import parse_script, run_script
from azobra.shipped import desktop_layout, mobile_layout

REPO = Path(__file__).resolve().parents[1]
FIXTURES = REPO / "frontend" / "fixtures"


@pytest.mark.parametrize("name", ["inventory.json", "desktop.json", "mobile.json"])
def test_fixture_copies_match_shipped_data(name, data_dir):
    assert (FIXTURES / name).read_bytes() == (data_dir / name).read_bytes(), (
        f"frontend/fixtures/{name} is stale; run scripts/export_frontend_fixtures.py"
    )


def test_goldens_fixture_matches_replay(goldens_dir):
    layouts = {"desktop": desktop_layout(), "mobile": mobile_layout()}
    manifest = json.loads((goldens_dir / "manifest.json").read_text(encoding="utf-8"))
    fixture = json.loads((FIXTURES / "goldens.json").read_text(encoding="utf-8"))
    by_name = {entry["name"]: entry for entry in fixture}
    assert set(by_name) == {item["script"] for item in manifest}

    for item in manifest:
        entry = by_name[item["script"]]
        text = (goldens_dir / item["script"]).read_text(encoding="utf-8")
        assert entry["script"] == text
        assert entry["layout"] == item["layout"]
        assert entry["backspaceUnit"] == item["backspaceUnit"]
        result = run_script(layouts[item["layout"]], parse_script(text), item["backspaceUnit"])
        assert result.ok
        assert entry["finalHex"] == to_hex(result.final_document)
        assert entry["expectations"] == [
            {"line": c.line, "hex": to_hex(c.actual)} for c in result.checks
        ]
