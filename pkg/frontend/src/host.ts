/**
 * The embedding boundary (docs/embedding-protocol.md) as a message
 * handler. The UI talks to the engine exclusively through these JSON
 * messages, exactly like any external host would; commit text travels
 * as hex codepoints.
 */

import { toHex } from "./codepoints.js";
import {
  BackspaceUnit,
  EditCommand,
  EngineState,
  KeyEvent,
  PopupError,
  initialState,
  process,
  selectPopup,
} from "./engine.js";
import { LayoutError, Modifier, chord, parseLayout } from "./layout.js";

export interface CommandMessage {
  kind: string;
  text?: string;
  count?: number;
  unit?: BackspaceUnit;
}

export type HostResponse =
  | { ok: true; [key: string]: unknown }
  | { ok: false; error: { code: string; message: string } };

function commandToMessage(cmd: EditCommand): CommandMessage {
  if (cmd.kind === "commit") return { kind: "commit", text: toHex(cmd.text) };
  if (cmd.kind === "delete_backward") {
    return { kind: "delete_backward", count: cmd.count, unit: cmd.unit };
  }
  return { kind: cmd.kind };
}

function failure(code: string, message: string): HostResponse {
  return { ok: false, error: { code, message } };
}

export class EngineHost {
  private state: EngineState | null = null;
  private unit: BackspaceUnit = "grapheme";

  handle(message: Record<string, unknown>): HostResponse {
    try {
      switch (message.op) {
        case "load_layout": return this.loadLayout(message);
        case "key_event": return this.keyEvent(message);
        case "select_popup": return this.popup(message);
        case "set_backspace_unit": return this.setUnit(message);
        case "reset": return this.reset();
        default: return failure("unknown_op", `unknown op ${JSON.stringify(message.op)}`);
      }
    } catch (exc) {
      if (exc instanceof LayoutError) return failure("layout_error", exc.message);
      if (exc instanceof PopupError) return failure(exc.code, exc.message);
      throw exc;
    }
  }

  private loadLayout(message: Record<string, unknown>): HostResponse {
    const layout = parseLayout(message.layout ?? {});
    if (message.backspaceUnit !== undefined) {
      this.unit = message.backspaceUnit as BackspaceUnit;
    }
    this.state = initialState(layout, this.unit);
    return { ok: true, name: layout.name, platform: layout.platform };
  }

  private reset(): HostResponse {
    if (this.state === null) return failure("no_layout", "no layout loaded");
    this.state = initialState(this.state.layout, this.unit);
    return { ok: true };
  }

  private setUnit(message: Record<string, unknown>): HostResponse {
    const unit = message.unit;
    if (unit !== "grapheme" && unit !== "codepoint") {
      return failure("bad_unit", `unknown backspace unit ${JSON.stringify(unit)}`);
    }
    this.unit = unit;
    if (this.state !== null) this.state = { ...this.state, backspaceUnit: unit };
    return { ok: true };
  }

  private keyEvent(message: Record<string, unknown>): HostResponse {
    if (this.state === null) return failure("no_layout", "no layout loaded");
    const key = message.key;
    if (typeof key !== "string") return failure("bad_event", "key must be a string");
    const mods = (message.modifiers ?? []) as Modifier[];
    const direction = message.direction === "release" ? "release" : "press";
    const event: KeyEvent = { chord: chord(key, ...mods), direction };
    const [state, commands] = process(this.state, event);
    this.state = state;
    return { ok: true, commands: commands.map(commandToMessage), pending: state.pending };
  }

  private popup(message: Record<string, unknown>): HostResponse {
    if (this.state === null) return failure("no_layout", "no layout loaded");
    const key = message.key;
    const index = message.index;
    if (typeof key !== "string" || typeof index !== "number") {
      return failure("bad_event", "select_popup needs a key and an integer index");
    }
    const [state, commands] = selectPopup(this.state, key, index);
    this.state = state;
    return { ok: true, commands: commands.map(commandToMessage), pending: state.pending };
  }
}
