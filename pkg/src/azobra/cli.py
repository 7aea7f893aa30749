"""The azobra command: validate, replay, repair, inspect.

Output always carries hex codepoints alongside glyphs, because terminal
fonts for this inventory are unreliable; hex is the ground truth. Exit
codes: 0 success, 1 findings or expectation failure, 2 usage/parse
errors.
"""

from __future__ import annotations

import argparse
import sys
import unicodedata

from .canonical import combining_class_lenient, grapheme_split, repair_order_counting, to_hex
from .errors import AzobraError, SchemaError
from .layout import load_layout_file
from .replay import diff_expectation, parse_script, run_script
from .validate import format_report, validate_files

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2


def _cmd_validate(args) -> int:
    import json

    try:
        report, forms = validate_files(args.layout, args.inventory)
    except (OSError, json.JSONDecodeError, SchemaError, ValueError) as exc:
        print(f"azobra validate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(format_report(report, forms))
    return EXIT_OK if report.ok else EXIT_FINDINGS


def _cmd_replay(args) -> int:
    try:
        layout = load_layout_file(args.layout)
        with open(args.script, encoding="utf-8") as fh:
            steps = parse_script(fh.read())
    except (OSError, AzobraError) as exc:
        print(f"azobra replay: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = run_script(layout, steps, backspace_unit=args.backspace_unit)
    status = EXIT_OK
    for check in result.checks:
        if check.ok:
            print(f'line {check.line}: PASS "{to_hex(check.expected)}"')
        else:
            print(f"line {check.line}: FAIL")
            print(diff_expectation(check))
            status = EXIT_FINDINGS
    if result.error:
        print(f"azobra replay: {result.error}", file=sys.stderr)
        status = EXIT_FINDINGS
    final = result.final_document
    print(f"final document: {to_hex(final) or '(empty)'}" + (f"  [{final}]" if final else ""))
    return status


def _repair_stream(data: bytes, source: str):
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise AzobraError(f"{source}: invalid UTF-8 at byte offset {exc.start}") from None
    return repair_order_counting(text)


def _cmd_repair(args) -> int:
    total = 0
    try:
        if not args.files:
            repaired, changed = _repair_stream(sys.stdin.buffer.read(), "stdin")
            sys.stdout.write(repaired)
            total = changed
        else:
            for path in args.files:
                with open(path, "rb") as fh:
                    repaired, changed = _repair_stream(fh.read(), path)
                total += changed
                if args.in_place:
                    with open(path, "w", encoding="utf-8") as fh:
                        fh.write(repaired)
                else:
                    sys.stdout.write(repaired)
    except (OSError, AzobraError) as exc:
        print(f"azobra repair: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"reordered runs: {total}", file=sys.stderr)
    return EXIT_OK


def _codepoint_name(cp: int) -> str:
    return unicodedata.name(chr(cp), f"<unnamed U+{cp:04X}>")


def _cmd_inspect(args) -> int:
    if args.file:
        try:
            with open(args.file, "rb") as fh:
                data = fh.read()
            text = data.decode("utf-8")
        except OSError as exc:
            print(f"azobra inspect: {exc}", file=sys.stderr)
            return EXIT_USAGE
        except UnicodeDecodeError as exc:
            print(f"azobra inspect: invalid UTF-8 at byte offset {exc.start}", file=sys.stderr)
            return EXIT_USAGE
    else:
        text = args.text or ""

    clusters = grapheme_split(text)
    index = 0
    for n, cluster in enumerate(clusters, start=1):
        for offset, ch in enumerate(cluster):
            cp = ord(ch)
            ccc = combining_class_lenient(cp)
            marker = f"cluster {n}" if offset == 0 else "."
            glyph = ch if ccc == 0 else "◌" + ch
            print(f"{cp:04X}  ccc={ccc:<3d}  {marker:<11}  {glyph}  {_codepoint_name(cp)}")
            index += 1
    print(f"{index} codepoint(s), {len(clusters)} cluster(s)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="azobra",
        description="Layout validation, keystroke replay, and text repair "
                    "for the Idu Azobra orthography.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a layout against the character inventory")
    p.add_argument("--layout", required=True, help="layout JSON file")
    p.add_argument("--inventory", required=True, help="inventory JSON file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("replay", help="run a keystroke script with golden expectations")
    p.add_argument("--layout", required=True, help="layout JSON file")
    p.add_argument("--backspace-unit", choices=["grapheme", "codepoint"],
                   default="grapheme", help="backspace deletion granularity")
    p.add_argument("script", help="replay script file")
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser("repair", help="reorder combining marks into canonical order")
    p.add_argument("files", nargs="*", help="input files (default: stdin to stdout)")
    p.add_argument("--in-place", action="store_true", help="rewrite files in place")
    p.set_defaults(func=_cmd_repair)

    p = sub.add_parser("inspect", help="per-codepoint listing with combining classes")
    p.add_argument("text", nargs="?", help="text to inspect")
    p.add_argument("--file", help="read text from a file instead")
    p.set_defaults(func=_cmd_inspect)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
