/**
 * One typing-tester session: the document buffer, the pending-accent
 * indicator, and the inspector feed. The buffer is mutated only by
 * applying the EditCommands the engine returns across the host
 * boundary; the UI never fabricates text. DOM-free so tests can drive
 * it headlessly with the golden scripts.
 */

import { combiningClass, fromHex, graphemeSplit } from "./codepoints.js";
import { BackspaceUnit, KeyEvent, typedText } from "./engine.js";
import { CommandMessage, EngineHost, HostResponse } from "./host.js";
import { Modifier, chord } from "./layout.js";

export interface InspectorRow {
  hex: string;
  ccc: number;
  clusterStart: boolean;
  cluster: number;
  glyph: string;
}

export interface SessionUpdate {
  ok: boolean;
  error?: string;
  /** true when the host keystroke must not reach the text field */
  suppressed: boolean;
}

export class TypingSession {
  private host = new EngineHost();
  buffer = "";
  pending: string | null = null;
  layoutName = "";
  platform: "desktop" | "mobile" | "" = "";
  backspaceUnit: BackspaceUnit = "grapheme";

  loadLayout(doc: unknown, unit?: BackspaceUnit): SessionUpdate {
    if (unit !== undefined) this.backspaceUnit = unit;
    const reply = this.host.handle({
      op: "load_layout",
      layout: doc,
      backspaceUnit: this.backspaceUnit,
    });
    if (!reply.ok) return { ok: false, error: reply.error.message, suppressed: false };
    this.layoutName = reply.name as string;
    this.platform = reply.platform as "desktop" | "mobile";
    this.buffer = "";
    this.pending = null;
    return { ok: true, suppressed: false };
  }

  keyEvent(key: string, modifiers: Modifier[] = [], direction: "press" | "release" = "press"): SessionUpdate {
    const reply = this.host.handle({ op: "key_event", key, modifiers, direction });
    return this.applyReply(reply, { chord: chord(key, ...modifiers), direction });
  }

  selectPopup(key: string, index: number): SessionUpdate {
    const reply = this.host.handle({ op: "select_popup", key, index });
    return this.applyReply(reply, null);
  }

  setBackspaceUnit(unit: BackspaceUnit): void {
    this.backspaceUnit = unit;
    this.host.handle({ op: "set_backspace_unit", unit });
  }

  reset(): void {
    this.host.handle({ op: "reset" });
    this.buffer = "";
    this.pending = null;
  }

  private applyReply(reply: HostResponse, event: KeyEvent | null): SessionUpdate {
    if (!reply.ok) return { ok: false, error: reply.error.message, suppressed: false };
    const commands = reply.commands as CommandMessage[];
    let suppressed = false;
    for (const cmd of commands) {
      if (cmd.kind === "commit") {
        this.buffer += fromHex(cmd.text ?? "");
      } else if (cmd.kind === "pass_through") {
        this.buffer += typedText(event);
      } else if (cmd.kind === "delete_backward") {
        this.deleteBackward(cmd.count ?? 1, cmd.unit ?? "grapheme");
        suppressed = true;
      } else if (cmd.kind === "suppress") {
        suppressed = true;
      }
    }
    this.pending = (reply.pending as string | null) ?? null;
    return { ok: true, suppressed };
  }

  private deleteBackward(count: number, unit: BackspaceUnit): void {
    for (let i = 0; i < count; i += 1) {
      if (this.buffer.length === 0) break;
      if (unit === "codepoint") {
        this.buffer = Array.from(this.buffer).slice(0, -1).join("");
      } else {
        this.buffer = graphemeSplit(this.buffer).slice(0, -1).join("");
      }
    }
  }

  /** Per-codepoint view of the buffer for the inspector panel. */
  inspectorRows(): InspectorRow[] {
    const rows: InspectorRow[] = [];
    let cluster = 0;
    for (const piece of graphemeSplit(this.buffer)) {
      cluster += 1;
      let first = true;
      for (const ch of piece) {
        const cp = ch.codePointAt(0)!;
        const ccc = combiningClass(cp);
        rows.push({
          hex: cp.toString(16).toUpperCase().padStart(4, "0"),
          ccc,
          clusterStart: first,
          cluster,
          glyph: ccc === 0 ? ch : `◌${ch}`,
        });
        first = false;
      }
    }
    return rows;
  }
}
