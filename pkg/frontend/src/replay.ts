/**
 * Replay-script parser (docs/replay-format.md), same grammar as the
 * CLI harness. Used by the test suite to drive a headless session with
 * the shipped golden scripts.
 */

import { fromHex } from "./codepoints.js";
import { CHAR_KEYS, Modifier } from "./layout.js";

export type ReplayStep =
  | { kind: "key"; line: number; key: string; modifiers: Modifier[] }
  | { kind: "popup"; line: number; baseKey: string; index: number }
  | { kind: "expect"; line: number; expected: string };

export class ReplayParseError extends Error {
  constructor(public line: number, message: string) {
    super(`line ${line}: ${message}`);
  }
}

const PREFIXES: Record<string, Modifier> = {
  "C-": "ctrl",
  "A-": "alt",
  "G-": "altgr",
  "S-": "shift",
};

const NAMED_TOKENS: Record<string, string> = { BKSP: "backspace", SPACE: "space" };

const EXPECT_RE = /^expect\s+"([0-9A-Fa-f \t]*)"\s*$/;

export function parseKeyToken(token: string, line: number): { key: string; modifiers: Modifier[] } {
  const modifiers: Modifier[] = [];
  let rest = token;
  while (rest.length > 2 && rest.slice(0, 2) in PREFIXES) {
    modifiers.push(PREFIXES[rest.slice(0, 2)]);
    rest = rest.slice(2);
  }
  let key: string;
  if (rest in NAMED_TOKENS) {
    key = NAMED_TOKENS[rest];
  } else if (rest.length === 1) {
    key = CHAR_KEYS[rest] ?? rest.toLowerCase();
  } else {
    throw new ReplayParseError(line, `unknown key token ${JSON.stringify(token)}`);
  }
  if (!/^[a-z0-9]$/.test(key) && !["backtick", "apostrophe", "tilde", "hyphen", "space", "backspace"].includes(key)) {
    throw new ReplayParseError(line, `unknown key token ${JSON.stringify(token)}`);
  }
  return { key, modifiers };
}

export function parseScript(text: string): ReplayStep[] {
  const steps: ReplayStep[] = [];
  text.split(/\r?\n/).forEach((raw, idx) => {
    const lineno = idx + 1;
    let line = raw.trim();
    let directive = "";
    const hash = line.indexOf("#");
    if (hash >= 0) {
      directive = line.slice(hash + 1).trim();
      line = line.slice(0, hash);
    }
    const tokens = line.split(/\s+/).filter((t) => t.length > 0);
    let i = 0;
    while (i < tokens.length) {
      const tok = tokens[i];
      if (tok === "POPUP") {
        if (i + 2 >= tokens.length) throw new ReplayParseError(lineno, "POPUP needs a key and an index");
        const baseKey = tokens[i + 1];
        const index = tokens[i + 2];
        if (!/^\d+$/.test(index)) throw new ReplayParseError(lineno, `bad POPUP index ${JSON.stringify(index)}`);
        steps.push({ kind: "popup", line: lineno, baseKey: baseKey.toLowerCase(), index: parseInt(index, 10) });
        i += 3;
      } else {
        const { key, modifiers } = parseKeyToken(tok, lineno);
        steps.push({ kind: "key", line: lineno, key, modifiers });
        i += 1;
      }
    }
    if (/^expect(\s|$)/.test(directive)) {
      const m = EXPECT_RE.exec(directive);
      if (m === null) throw new ReplayParseError(lineno, "malformed #expect directive");
      steps.push({ kind: "expect", line: lineno, expected: fromHex(m[1]) });
    }
    // any other text after '#' is a comment
  });
  return steps;
}
