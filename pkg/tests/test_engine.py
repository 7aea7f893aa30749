import pytest
from hypothesis import given, settings, strategies as st

from azobra.canonical import is_canonical
from azobra.engine import (
    EngineState,
    KeyEvent,
    apply_commands,
    commit,
    delete_backward,
    process,
    select_popup,
    typed_text,
)
from azobra.errors import NoPopupError, PlatformError, PopupIndexError
from azobra.layout import chord
from azobra.shipped import desktop_layout, mobile_layout


def press(key, *mods):
    return KeyEvent(chord(key, *mods))


def release(key, *mods):
    return KeyEvent(chord(key, *mods), "release")


def run(events, layout=None, unit="grapheme"):
    state = EngineState(layout or desktop_layout(), backspace_unit=unit)
    doc = ""
    history = []
    for event in events:
        state, commands = process(state, event)
        history.append(commands)
        doc = apply_commands(doc, commands, event)
    return state, doc, history


def kinds(commands):
    return [c.kind for c in commands]


def test_release_events_pass_through():
    state = EngineState(desktop_layout())
    new_state, commands = process(state, release("e", "altgr"))
    assert kinds(commands) == ["pass_through"]
    assert new_state == state


def test_direct_mapping_commits():
    _, commands = process(EngineState(desktop_layout()), press("e", "altgr"))
    assert kinds(commands) == ["suppress", "commit"]
    assert commands[1].text == "ə"


def test_unmapped_press_passes_through():
    state = EngineState(desktop_layout())
    new_state, commands = process(state, press("k"))
    assert kinds(commands) == ["pass_through"]
    assert new_state == state


def test_dead_key_arms_accent():
    new_state, commands = process(EngineState(desktop_layout()), press("backtick", "altgr"))
    assert kinds(commands) == ["suppress"]
    assert new_state.pending == "grave"


def test_two_step_composition():
    _, doc, history = run([press("tilde", "altgr"), press("e", "altgr")])
    assert doc == "ə̃"
    assert kinds(history[0]) == ["suppress"]
    assert kinds(history[1]) == ["suppress", "commit"]


def test_grave_retracted_schwa():
    _, doc, _ = run([press("backtick", "altgr"), press("r", "altgr")])
    assert doc == "ə̱̀"


def test_same_dead_key_twice_commits_standalone():
    state, doc, _ = run([press("backtick", "altgr"), press("backtick", "altgr")])
    assert doc == "`"
    assert state.pending is None


def test_space_commits_standalone():
    state, doc, _ = run([press("apostrophe", "altgr"), press("space")])
    assert doc == "´"
    assert state.pending is None


def test_failed_composition_commits_standalone_then_types():
    state, doc, history = run([press("apostrophe", "altgr"), press("z")])
    assert doc == "´z"
    assert kinds(history[1]) == ["commit", "pass_through"]
    assert state.pending is None


def test_second_dead_key_rearms():
    state, doc, _ = run([press("backtick", "altgr"), press("tilde", "altgr")])
    assert doc == "`"
    assert state.pending == "nasal"


def test_backspace_cancels_pending():
    state, doc, history = run([press("backtick", "altgr"), press("backspace")])
    assert doc == ""
    assert kinds(history[1]) == ["suppress"]
    assert state.pending is None


def test_backspace_idle_deletes():
    _, commands = process(EngineState(desktop_layout()), press("backspace"))
    assert kinds(commands) == ["suppress", "delete_backward"]
    assert commands[1] == delete_backward(1, "grapheme")


def test_backspace_honors_codepoint_unit():
    state = EngineState(desktop_layout(), backspace_unit="codepoint")
    _, commands = process(state, press("backspace"))
    assert commands[1] == delete_backward(1, "codepoint")


def test_ctrl_chords_pass_through_even_while_pending():
    state = EngineState(desktop_layout())
    state, _ = process(state, press("backtick", "altgr"))
    new_state, commands = process(state, press("c", "ctrl"))
    assert kinds(commands) == ["pass_through"]
    assert new_state.pending == "grave"


def test_apply_commit_appends():
    assert apply_commands("", [commit("ə̱̀")]) == "ə̱̀"


def test_apply_delete_grapheme_removes_whole_character():
    assert apply_commands("ə̱̀", [delete_backward(1, "grapheme")]) == ""


def test_apply_delete_codepoint_removes_one():
    assert apply_commands("ə̱̀", [delete_backward(1, "codepoint")]) == "ə̱"


def test_apply_delete_on_empty_is_clamped():
    assert apply_commands("", [delete_backward(1, "grapheme")]) == ""


def test_typed_text_shift_uppercases():
    assert typed_text(press("a", "shift")) == "A"
    assert typed_text(press("hyphen")) == "-"
    assert typed_text(press("c", "ctrl")) == ""
    assert typed_text(release("a")) == ""


def test_select_popup_commits_entry():
    state = EngineState(mobile_layout())
    _, commands = select_popup(state, "e", 0)
    assert kinds(commands) == ["commit"]
    assert commands[0].text == "ə"


def test_select_popup_retracted_o_grave():
    state = EngineState(mobile_layout())
    strip = state.layout.popup_for("o")
    index = strip.entries.index("ò̱")
    _, commands = select_popup(state, "o", index)
    assert commands[0].text == "ò̱"


def test_select_popup_errors():
    with pytest.raises(PlatformError):
        select_popup(EngineState(desktop_layout()), "e", 0)
    with pytest.raises(NoPopupError):
        select_popup(EngineState(mobile_layout()), "q", 0)
    with pytest.raises(PopupIndexError):
        select_popup(EngineState(mobile_layout()), "e", 99)


# --- Properties ----------------------------------------------------------

KEYS = list("abcekorsuz15") + ["backtick", "apostrophe", "tilde", "hyphen", "space", "backspace"]


def chords(modifiers=("shift", "altgr", "ctrl")):
    return st.builds(
        lambda key, mods: chord(key, *mods),
        st.sampled_from(KEYS),
        st.sets(st.sampled_from(modifiers), max_size=2),
    )


def key_events(modifiers=("shift", "altgr", "ctrl")):
    return st.builds(
        KeyEvent,
        chords(modifiers),
        st.sampled_from(["press", "press", "press", "release"]),
    )


@settings(max_examples=200)
@given(st.lists(key_events(), max_size=40))
def test_every_commit_is_canonical(stream):
    state = EngineState(desktop_layout())
    for event in stream:
        state, commands = process(state, event)
        for cmd in commands:
            if cmd.kind == "commit":
                assert is_canonical(cmd.text)


@settings(max_examples=200)
@given(st.lists(key_events(modifiers=("shift", "ctrl")), max_size=40))
def test_pass_through_transparency(stream):
    # No altgr chords: the engine must behave exactly like no engine.
    state = EngineState(desktop_layout())
    doc = ""
    null_doc = ""
    for event in stream:
        state, commands = process(state, event)
        for cmd in commands:
            assert cmd.kind in ("pass_through", "suppress", "delete_backward")
        doc = apply_commands(doc, commands, event)
        null_doc = null_host(null_doc, event)
    assert doc == null_doc


def null_host(doc, event):
    # A host with no engine: printable presses append, backspace deletes.
    if event.direction != "press":
        return doc
    if event.chord.key == "backspace" and event.chord.modifiers <= {"shift"}:
        return doc[:-1]
    return doc + typed_text(event)


@settings(max_examples=200)
@given(st.lists(key_events(), max_size=40))
def test_process_is_deterministic(stream):
    def run_once():
        state = EngineState(desktop_layout())
        out = []
        for event in stream:
            state, commands = process(state, event)
            out.append(commands)
        return out

    assert run_once() == run_once()


@settings(max_examples=200)
@given(st.lists(key_events(), max_size=40))
def test_pending_never_sticks_across_dead_keys(stream):
    state = EngineState(desktop_layout())
    for event in stream:
        new_state, _ = process(state, event)
        dead = state.layout.dead_key_for(event.chord)
        if (event.direction == "press" and dead is not None
                and not (event.chord.modifiers - {"shift", "altgr"})
                and state.pending is not None):
            # a dead key pressed while an accent was already pending
            # must never leave the earlier accent armed
            assert new_state.pending != state.pending
        state = new_state
