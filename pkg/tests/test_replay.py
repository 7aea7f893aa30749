import pytest

from azobra.errors import ReplayParseError
from azobra.layout import chord
from azobra.replay import diff_expectation, parse_key_token, parse_script, run_script
from azobra.shipped import desktop_layout, mobile_layout


def test_parse_key_tokens():
    assert parse_key_token("G-e", 1).chord == chord("e", "altgr")
    assert parse_key_token("G-S-r", 1).chord == chord("r", "altgr", "shift")
    assert parse_key_token("G-`", 1).chord == chord("backtick", "altgr")
    assert parse_key_token("G--", 1).chord == chord("hyphen", "altgr")
    assert parse_key_token("BKSP", 1).chord == chord("backspace")
    assert parse_key_token("SPACE", 1).chord == chord("space")
    assert parse_key_token("C-c", 1).chord == chord("c", "ctrl")


def test_unknown_token_names_line():
    with pytest.raises(ReplayParseError, match="line 3"):
        parse_script('G-e\nG-r\nWAT-7\n')


def test_malformed_expect_rejected():
    with pytest.raises(ReplayParseError):
        parse_script('G-e #expect 0259\n')


def test_comments_and_blank_lines_ignored():
    steps = parse_script("\n# expected things are explained here\n  \nG-e\n")
    assert [s.kind for s in steps] == ["key"]


def test_expect_empty_document():
    steps = parse_script('#expect ""\n')
    assert steps[0].kind == "expect"
    assert steps[0].expected == ""


def test_run_script_worked_example():
    steps = parse_script('G-~ G-e #expect "0259 0303"\n')
    result = run_script(desktop_layout(), steps)
    assert result.ok
    assert result.final_document == "ə̃"


def test_run_script_fails_fast_with_diff():
    steps = parse_script('G-e #expect "0259"\nG-r #expect "FFFF"\nG-o #expect "006F 0331"\n')
    result = run_script(desktop_layout(), steps)
    assert not result.ok
    assert len(result.checks) == 2  # stops at the first failure
    diff = diff_expectation(result.checks[-1])
    assert "first difference at codepoint 0" in diff
    assert "U+FFFF" in diff


def test_run_script_popup_steps():
    steps = parse_script('POPUP e 0 #expect "0259"\nPOPUP q 0\n')
    result = run_script(mobile_layout(), steps)
    assert result.error  # no strip for q
    assert result.checks[0].ok


def test_popup_needs_index():
    with pytest.raises(ReplayParseError):
        parse_script("POPUP e\n")
    with pytest.raises(ReplayParseError):
        parse_script("POPUP e x\n")


def test_backspace_units():
    steps = parse_script('G-` G-r BKSP #expect ""\n')
    assert run_script(desktop_layout(), steps, "grapheme").ok
    steps = parse_script('G-` G-r BKSP #expect "0259 0331"\n')
    assert run_script(desktop_layout(), steps, "codepoint").ok
