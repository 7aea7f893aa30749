/**
 * The keystroke state machine, ported rule for rule from the engine
 * package; the golden-script fixtures verify both sides stay
 * bit-identical. See docs/embedding-protocol.md for the command
 * contract.
 */

import { graphemeSplit } from "./codepoints.js";
import {
  AccentId,
  Chord,
  KEY_CHARS,
  Layout,
  chordId,
  composeKey,
  deadKeyFor,
  popupFor,
  standaloneFor,
} from "./layout.js";

export type BackspaceUnit = "grapheme" | "codepoint";
export type Direction = "press" | "release";

export interface KeyEvent {
  chord: Chord;
  direction: Direction;
}

export type EditCommand =
  | { kind: "pass_through" }
  | { kind: "suppress" }
  | { kind: "commit"; text: string }
  | { kind: "delete_backward"; count: number; unit: BackspaceUnit };

export interface EngineState {
  layout: Layout;
  pending: AccentId | null;
  backspaceUnit: BackspaceUnit;
}

export class PopupError extends Error {
  constructor(public code: "not_mobile" | "no_popup" | "bad_index", message: string) {
    super(message);
  }
}

const PASS_THROUGH: EditCommand = { kind: "pass_through" };
const SUPPRESS: EditCommand = { kind: "suppress" };

function commit(text: string): EditCommand {
  return { kind: "commit", text };
}

function isTextModifier(mod: string): boolean {
  return mod === "shift" || mod === "altgr";
}

export function initialState(layout: Layout, backspaceUnit: BackspaceUnit = "grapheme"): EngineState {
  return { layout, pending: null, backspaceUnit };
}

export function process(state: EngineState, event: KeyEvent): [EngineState, EditCommand[]] {
  if (event.direction !== "press") return [state, [PASS_THROUGH]];
  const c = event.chord;
  if (c.modifiers.some((m) => !isTextModifier(m))) {
    // Ctrl/Alt shortcuts stay invisible to composition.
    return [state, [PASS_THROUGH]];
  }

  if (state.pending === null) return processIdle(state, c);

  const rule = state.layout.composeTable.get(composeKey(state.pending, c));
  const standalone = standaloneFor(state.layout, state.pending);
  const cleared: EngineState = { ...state, pending: null };
  if (rule !== undefined) return [cleared, [SUPPRESS, commit(rule.output)]];
  const dead = deadKeyFor(state.layout, c);
  if (dead !== undefined && dead.accent === state.pending) {
    return [cleared, [SUPPRESS, commit(standalone)]];
  }
  if (c.key === "space") return [cleared, [SUPPRESS, commit(standalone)]];
  if (c.key === "backspace") return [cleared, [SUPPRESS]];
  // Failed composition: emit the standalone accent, then treat the
  // chord as if nothing had been pending (it may arm another accent).
  const [next, commands] = processIdle(cleared, c);
  return [next, [commit(standalone), ...commands]];
}

function processIdle(state: EngineState, c: Chord): [EngineState, EditCommand[]] {
  const mapping = state.layout.direct.get(chordId(c));
  if (mapping !== undefined) return [state, [SUPPRESS, commit(mapping.output)]];
  const dead = deadKeyFor(state.layout, c);
  if (dead !== undefined) return [{ ...state, pending: dead.accent }, [SUPPRESS]];
  if (c.key === "backspace" && c.modifiers.every((m) => m === "shift")) {
    return [state, [SUPPRESS, { kind: "delete_backward", count: 1, unit: state.backspaceUnit }]];
  }
  return [state, [PASS_THROUGH]];
}

export function selectPopup(state: EngineState, baseKey: string, index: number): [EngineState, EditCommand[]] {
  if (state.layout.platform !== "mobile") {
    throw new PopupError("not_mobile", `layout ${state.layout.name} has no popup strips`);
  }
  const strip = popupFor(state.layout, baseKey);
  if (strip === undefined) {
    throw new PopupError("no_popup", `no popup strip for key ${JSON.stringify(baseKey)}`);
  }
  if (!(index >= 0 && index < strip.entries.length)) {
    throw new PopupError(
      "bad_index",
      `index ${index} outside strip for ${JSON.stringify(baseKey)} (length ${strip.entries.length})`,
    );
  }
  return [state, [commit(strip.entries[index])]];
}

/** Plain text a pass-through press would type in a host text field. */
export function typedText(event: KeyEvent | null): string {
  if (event === null || event.direction !== "press") return "";
  const c = event.chord;
  if (c.modifiers.some((m) => m !== "shift")) return "";
  const char = c.key.length === 1 ? c.key : KEY_CHARS[c.key] ?? "";
  if (char === "") return "";
  if (c.modifiers.includes("shift") && /[a-z]/.test(char)) return char.toUpperCase();
  return char;
}

/** Simulated host text field: apply edit commands to a document. */
export function applyCommands(document: string, commands: EditCommand[], event: KeyEvent | null = null): string {
  for (const cmd of commands) {
    if (cmd.kind === "commit") {
      document += cmd.text;
    } else if (cmd.kind === "pass_through") {
      document += typedText(event);
    } else if (cmd.kind === "delete_backward") {
      document = deleteBackward(document, cmd.count, cmd.unit);
    }
    // suppress: nothing reaches the document
  }
  return document;
}

function deleteBackward(document: string, count: number, unit: BackspaceUnit): string {
  for (let i = 0; i < count; i += 1) {
    if (document.length === 0) break;
    if (unit === "codepoint") {
      const cps = Array.from(document);
      document = cps.slice(0, -1).join("");
    } else {
      const clusters = graphemeSplit(document);
      document = clusters.slice(0, -1).join("");
    }
  }
  return document;
}
