import { readFileSync } from "node:fs";
import { beforeEach, describe, expect, it } from "vitest";

import { TypingSession } from "../src/session.js";

function fixture(name: string): unknown {
  return JSON.parse(readFileSync(new URL(`../fixtures/${name}`, import.meta.url), "utf-8"));
}

const desktopDoc = fixture("desktop.json");
const mobileDoc = fixture("mobile.json");

describe("TypingSession", () => {
  let session: TypingSession;

  beforeEach(() => {
    session = new TypingSession();
  });

  it("reports layout metadata after load", () => {
    const update = session.loadLayout(desktopDoc);
    expect(update.ok).toBe(true);
    expect(session.layoutName).toBe("Idu Azobra Desktop");
    expect(session.platform).toBe("desktop");
  });

  it("surfaces load failures instead of keeping a stale layout", () => {
    const update = session.loadLayout({ name: "x", platform: "bogus" });
    expect(update.ok).toBe(false);
    expect(update.error).toMatch(/platform/);
  });

  it("mutates the buffer only through engine commands", () => {
    session.loadLayout(desktopDoc);
    session.keyEvent("e", ["altgr"]);
    expect(session.buffer).toBe("ə");
    session.keyEvent("k"); // pass_through types the plain letter
    expect(session.buffer).toBe("ək");
    session.keyEvent("c", ["ctrl"]); // shortcut: nothing reaches the buffer
    expect(session.buffer).toBe("ək");
  });

  it("tracks the pending indicator exactly while an accent is armed", () => {
    session.loadLayout(desktopDoc);
    expect(session.pending).toBeNull();
    session.keyEvent("backtick", ["altgr"]);
    expect(session.pending).toBe("grave");
    session.keyEvent("r", ["altgr"]);
    expect(session.pending).toBeNull();
    expect(session.buffer).toBe("ə̱̀");
  });

  it("reports suppression so hosts can preventDefault", () => {
    session.loadLayout(desktopDoc);
    expect(session.keyEvent("e", ["altgr"]).suppressed).toBe(true);
    expect(session.keyEvent("k").suppressed).toBe(false);
  });

  it("switches backspace units mid-session", () => {
    session.loadLayout(desktopDoc);
    session.keyEvent("backtick", ["altgr"]);
    session.keyEvent("r", ["altgr"]);
    session.setBackspaceUnit("codepoint");
    session.keyEvent("backspace");
    expect(session.buffer).toBe("ə̱");
    session.setBackspaceUnit("grapheme");
    session.keyEvent("backspace");
    expect(session.buffer).toBe("");
  });

  it("selects popup entries on mobile and types plain letters on tap", () => {
    session.loadLayout(mobileDoc);
    session.selectPopup("e", 1);
    expect(session.buffer).toBe("ə̱");
    session.keyEvent("e"); // tap fallback
    expect(session.buffer).toBe("ə̱e");
    const update = session.selectPopup("q", 0);
    expect(update.ok).toBe(false);
  });

  it("feeds the inspector hex, combining class, and cluster boundaries", () => {
    session.loadLayout(desktopDoc);
    session.keyEvent("backtick", ["altgr"]);
    session.keyEvent("r", ["altgr"]);
    session.keyEvent("b");
    const rows = session.inspectorRows();
    expect(rows.map((r) => r.hex)).toEqual(["0259", "0331", "0300", "0062"]);
    expect(rows.map((r) => r.ccc)).toEqual([0, 220, 230, 0]);
    expect(rows.map((r) => r.clusterStart)).toEqual([true, false, false, true]);
    expect(rows[3].cluster).toBe(2);
  });

  it("reset clears buffer and pending but keeps the layout", () => {
    session.loadLayout(desktopDoc);
    session.keyEvent("backtick", ["altgr"]);
    session.reset();
    expect(session.buffer).toBe("");
    expect(session.pending).toBeNull();
    session.keyEvent("e", ["altgr"]);
    expect(session.buffer).toBe("ə");
  });
});
