/**
 * Keyboard layout model: the same strict JSON format the engine
 * package ships (docs/layout-format.md). Violations raise LayoutError
 * with the offending entry named; nothing is silently fixed.
 */

import { fromHex, isCanonical, toHex } from "./codepoints.js";

export type Platform = "desktop" | "mobile";
export type AccentId = "grave" | "acute" | "nasal" | "macron";
export type Modifier = "shift" | "altgr" | "ctrl" | "alt";

export const ACCENT_IDS: readonly AccentId[] = ["grave", "acute", "nasal", "macron"];
export const ACCENT_MARKS: Record<AccentId, number> = {
  grave: 0x0300,
  acute: 0x0301,
  nasal: 0x0303,
  macron: 0x0304,
};

export const NAMED_KEYS = ["backtick", "apostrophe", "tilde", "hyphen", "space", "backspace"];

export const KEY_CHARS: Record<string, string> = {
  backtick: "`",
  apostrophe: "'",
  tilde: "~",
  hyphen: "-",
  space: " ",
};

export const CHAR_KEYS: Record<string, string> = Object.fromEntries(
  Object.entries(KEY_CHARS).map(([name, ch]) => [ch, name]),
);

export class LayoutError extends Error {}

export interface Chord {
  key: string;
  modifiers: Modifier[]; // sorted, unique
}

export function chord(key: string, ...modifiers: Modifier[]): Chord {
  let k = key.toLowerCase();
  if (k in CHAR_KEYS) k = CHAR_KEYS[k];
  return { key: k, modifiers: [...new Set(modifiers)].sort() };
}

/** Map key for chord-indexed tables. */
export function chordId(c: Chord): string {
  return `${c.key}|${c.modifiers.join(",")}`;
}

export function chordToken(c: Chord): string {
  let prefix = "";
  for (const [mod, tag] of [["ctrl", "C-"], ["alt", "A-"], ["altgr", "G-"], ["shift", "S-"]]) {
    if (c.modifiers.includes(mod as Modifier)) prefix += tag;
  }
  let key = KEY_CHARS[c.key] ?? c.key;
  if (c.key === "backspace") key = "BKSP";
  else if (c.key === "space") key = "SPACE";
  return prefix + key;
}

export interface DeadKeyDef {
  trigger: Chord;
  accent: AccentId;
  standalone: string;
}

export interface PopupStrip {
  baseKey: string;
  entries: string[];
}

export interface ComposeRule {
  accent: AccentId;
  chord: Chord;
  output: string;
  extension: boolean;
}

export interface Layout {
  name: string;
  platform: Platform;
  direct: Map<string, { chord: Chord; output: string }>;
  deadKeys: DeadKeyDef[];
  composeTable: Map<string, ComposeRule>; // `${accent}|${chordId}`
  popups: Map<string, PopupStrip>;
}

export function composeKey(accent: AccentId, c: Chord): string {
  return `${accent}|${chordId(c)}`;
}

export function deadKeyFor(layout: Layout, c: Chord): DeadKeyDef | undefined {
  const id = chordId(c);
  return layout.deadKeys.find((dk) => chordId(dk.trigger) === id);
}

export function standaloneFor(layout: Layout, accent: AccentId): string {
  const dk = layout.deadKeys.find((d) => d.accent === accent);
  if (!dk) throw new LayoutError(`no dead key for accent ${accent}`);
  return dk.standalone;
}

export function popupFor(layout: Layout, baseKey: string): PopupStrip | undefined {
  return layout.popups.get(baseKey.toLowerCase());
}

// --- Parsing -------------------------------------------------------------

function validKey(key: string): boolean {
  return /^[a-z0-9]$/.test(key) || NAMED_KEYS.includes(key);
}

function checkFields(entry: unknown, required: string[], optional: string[], where: string):
    Record<string, unknown> {
  if (typeof entry !== "object" || entry === null || Array.isArray(entry)) {
    throw new LayoutError(`${where}: expected an object`);
  }
  const record = entry as Record<string, unknown>;
  const keys = Object.keys(record);
  const missing = required.filter((f) => !keys.includes(f));
  const unknown = keys.filter((f) => !required.includes(f) && !optional.includes(f));
  if (missing.length > 0) throw new LayoutError(`${where}: missing field(s) ${missing.join(", ")}`);
  if (unknown.length > 0) throw new LayoutError(`${where}: unknown field(s) ${unknown.join(", ")}`);
  return record;
}

function parseChord(entry: Record<string, unknown>, where: string): Chord {
  const key = entry.key;
  if (typeof key !== "string") throw new LayoutError(`${where}: key must be a string`);
  const normalized = CHAR_KEYS[key.toLowerCase()] ?? key.toLowerCase();
  if (!validKey(normalized)) throw new LayoutError(`${where}: bad key identifier ${JSON.stringify(key)}`);
  const mods = entry.modifiers ?? [];
  if (!Array.isArray(mods) || !mods.every((m) => m === "shift" || m === "altgr")) {
    throw new LayoutError(`${where}: modifiers must be a list drawn from shift/altgr`);
  }
  return chord(key, ...(mods as Modifier[]));
}

function parseOutput(value: unknown, where: string): string {
  if (typeof value !== "string") throw new LayoutError(`${where}: output must be a hex string`);
  let text: string;
  try {
    text = fromHex(value);
  } catch {
    throw new LayoutError(`${where}: bad hex codepoint string ${JSON.stringify(value)}`);
  }
  if (text.length === 0) throw new LayoutError(`${where}: empty output`);
  if (!isCanonical(text)) {
    throw new LayoutError(`${where}: output ${toHex(text)} is not in canonical order`);
  }
  return text;
}

export function parseLayout(doc: unknown): Layout {
  const top = checkFields(doc, ["name", "platform"],
    ["direct", "deadKeys", "composeTable", "popups"], "layout");
  const name = top.name;
  const platform = top.platform;
  if (typeof name !== "string" || name.length === 0) {
    throw new LayoutError("layout: name must be a nonempty string");
  }
  if (platform !== "desktop" && platform !== "mobile") {
    throw new LayoutError(`layout: unknown platform ${JSON.stringify(platform)}`);
  }

  const direct = new Map<string, { chord: Chord; output: string }>();
  for (const [i, raw] of asList(top.direct, "direct").entries()) {
    const where = `direct[${i}]`;
    const entry = checkFields(raw, ["key", "output"], ["modifiers"], where);
    const c = parseChord(entry, where);
    if (direct.has(chordId(c))) {
      throw new LayoutError(`${where}: chord ${chordToken(c)} already bound in direct`);
    }
    direct.set(chordId(c), { chord: c, output: parseOutput(entry.output, where) });
  }

  const deadKeys: DeadKeyDef[] = [];
  for (const [i, raw] of asList(top.deadKeys, "deadKeys").entries()) {
    const where = `deadKeys[${i}]`;
    const entry = checkFields(raw, ["key", "accent", "standalone"], ["modifiers"], where);
    const c = parseChord(entry, where);
    const accent = entry.accent;
    if (!ACCENT_IDS.includes(accent as AccentId)) {
      throw new LayoutError(`${where}: unknown accent ${JSON.stringify(accent)}`);
    }
    if (deadKeys.some((dk) => chordId(dk.trigger) === chordId(c))) {
      throw new LayoutError(`${where}: chord ${chordToken(c)} already a dead key`);
    }
    if (direct.has(chordId(c))) {
      throw new LayoutError(`${where}: chord ${chordToken(c)} bound in both direct and deadKeys`);
    }
    deadKeys.push({
      trigger: c,
      accent: accent as AccentId,
      standalone: parseOutput(entry.standalone, where),
    });
  }

  const composeTable = new Map<string, ComposeRule>();
  for (const [i, raw] of asList(top.composeTable, "composeTable").entries()) {
    const where = `composeTable[${i}]`;
    const entry = checkFields(raw, ["accent", "key", "output"], ["modifiers", "extension"], where);
    const accent = entry.accent;
    if (!ACCENT_IDS.includes(accent as AccentId)) {
      throw new LayoutError(`${where}: unknown accent ${JSON.stringify(accent)}`);
    }
    const c = parseChord(entry, where);
    const extension = entry.extension ?? false;
    if (typeof extension !== "boolean") {
      throw new LayoutError(`${where}: extension must be a boolean`);
    }
    const key = composeKey(accent as AccentId, c);
    if (composeTable.has(key)) {
      throw new LayoutError(`${where}: compose key (${accent}, ${chordToken(c)}) already bound`);
    }
    composeTable.set(key, {
      accent: accent as AccentId,
      chord: c,
      output: parseOutput(entry.output, where),
      extension,
    });
  }

  const popups = new Map<string, PopupStrip>();
  for (const [i, raw] of asList(top.popups, "popups").entries()) {
    const where = `popups[${i}]`;
    const entry = checkFields(raw, ["key", "entries"], [], where);
    const key = entry.key;
    if (typeof key !== "string" || !validKey(key.toLowerCase())) {
      throw new LayoutError(`${where}: bad key identifier ${JSON.stringify(key)}`);
    }
    const lower = key.toLowerCase();
    if (popups.has(lower)) {
      throw new LayoutError(`${where}: popup for ${JSON.stringify(lower)} already defined`);
    }
    const entries = entry.entries;
    if (!Array.isArray(entries) || entries.length === 0) {
      throw new LayoutError(`${where}: entries must be a nonempty list`);
    }
    const sequences: string[] = [];
    for (const [j, e] of entries.entries()) {
      const seq = parseOutput(e, `${where}.entries[${j}]`);
      if (sequences.includes(seq)) {
        throw new LayoutError(`${where}: duplicate entry ${toHex(seq)} in strip for ${lower}`);
      }
      sequences.push(seq);
    }
    popups.set(lower, { baseKey: lower, entries: sequences });
  }

  if (platform === "desktop" && popups.size > 0) {
    throw new LayoutError("layout: desktop layouts must not define popups");
  }
  if (platform === "mobile" && (deadKeys.length > 0 || composeTable.size > 0)) {
    throw new LayoutError("layout: mobile layouts must not define deadKeys or composeTable");
  }

  return { name, platform, direct, deadKeys, composeTable, popups };
}

function asList(value: unknown, where: string): unknown[] {
  if (value === undefined) return [];
  if (!Array.isArray(value)) throw new LayoutError(`${where}: expected a list`);
  return value;
}
