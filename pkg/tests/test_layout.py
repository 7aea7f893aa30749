import json

import pytest

from azobra.errors import (
    ChordConflictError,
    DuplicateChordError,
    NonCanonicalOutputError,
    PlatformError,
    SchemaError,
)
from azobra.layout import chord, layout_to_doc, load_layout, parse_layout, popup_lookup
from azobra.shipped import desktop_layout, mobile_layout


def minimal_desktop(**overrides) -> dict:
    doc = {
        "name": "test",
        "platform": "desktop",
        "direct": [{"key": "e", "modifiers": ["altgr"], "output": "0259"}],
        "deadKeys": [],
        "composeTable": [],
        "popups": [],
    }
    doc.update(overrides)
    return doc


def test_load_shipped_desktop_direct_mapping():
    layout = desktop_layout()
    assert layout.direct[chord("e", "altgr")] == "ə"


def test_chord_keys_are_case_insensitive():
    layout = parse_layout(minimal_desktop(
        direct=[{"key": "E", "modifiers": ["altgr"], "output": "0259"}]
    ))
    assert layout.direct[chord("e", "altgr")] == "ə"


def test_duplicate_chord_rejected():
    doc = minimal_desktop(direct=[
        {"key": "e", "modifiers": ["altgr"], "output": "0259"},
        {"key": "E", "modifiers": ["altgr"], "output": "018F"},
    ])
    with pytest.raises(DuplicateChordError):
        parse_layout(doc)


def test_non_canonical_output_rejected():
    doc = minimal_desktop(direct=[
        {"key": "r", "modifiers": ["altgr"], "output": "0259 0300 0331"},
    ])
    with pytest.raises(NonCanonicalOutputError):
        parse_layout(doc)


def test_dead_key_direct_conflict_rejected():
    doc = minimal_desktop(deadKeys=[
        {"key": "e", "modifiers": ["altgr"], "accent": "grave", "standalone": "0060"},
    ])
    with pytest.raises(ChordConflictError):
        parse_layout(doc)


def test_unknown_top_level_field_rejected():
    with pytest.raises(SchemaError):
        parse_layout(minimal_desktop(extras=[]))


def test_unknown_entry_field_rejected():
    doc = minimal_desktop(direct=[
        {"key": "e", "modifiers": ["altgr"], "output": "0259", "comment": "hi"},
    ])
    with pytest.raises(SchemaError):
        parse_layout(doc)


def test_unknown_modifier_rejected():
    doc = minimal_desktop(direct=[
        {"key": "e", "modifiers": ["ctrl"], "output": "0259"},
    ])
    with pytest.raises(SchemaError):
        parse_layout(doc)


def test_desktop_with_popups_rejected():
    doc = minimal_desktop(popups=[{"key": "e", "entries": ["0259"]}])
    with pytest.raises(SchemaError):
        parse_layout(doc)


def test_mobile_with_dead_keys_rejected():
    doc = {
        "name": "test", "platform": "mobile", "direct": [],
        "deadKeys": [{"key": "backtick", "modifiers": ["altgr"],
                      "accent": "grave", "standalone": "0060"}],
        "composeTable": [], "popups": [{"key": "e", "entries": ["0259"]}],
    }
    with pytest.raises(SchemaError):
        parse_layout(doc)


def test_duplicate_popup_entry_rejected():
    doc = {
        "name": "test", "platform": "mobile", "direct": [], "deadKeys": [],
        "composeTable": [],
        "popups": [{"key": "e", "entries": ["0259", "0259"]}],
    }
    with pytest.raises(SchemaError):
        parse_layout(doc)


def test_invalid_json_rejected():
    with pytest.raises(SchemaError):
        load_layout("{not json")


@pytest.mark.parametrize("make", [desktop_layout, mobile_layout])
def test_round_trip_stability(make):
    layout = make()
    doc = layout_to_doc(layout)
    reloaded = parse_layout(json.loads(json.dumps(doc)))
    assert reloaded == layout
    assert layout_to_doc(reloaded) == doc


def test_popup_lookup_on_mobile():
    layout = mobile_layout()
    strip = popup_lookup(layout, "e")
    assert strip is not None
    assert strip.entries[0] == "ə"
    assert strip.entries[1] == "ə̱"
    assert popup_lookup(layout, "q") is None


def test_popup_lookup_requires_mobile():
    with pytest.raises(PlatformError):
        popup_lookup(desktop_layout(), "e")


def test_popup_strip_for_o_has_retracted_forms():
    strip = popup_lookup(mobile_layout(), "o")
    assert "o̱" in strip.entries
    for accent in ("̀", "́", "̃", "̄"):
        assert "o̱" + accent in strip.entries


def test_mobile_vowels_all_have_strips():
    layout = mobile_layout()
    for key in "aeiou":
        strip = popup_lookup(layout, key)
        assert strip is not None and strip.entries
