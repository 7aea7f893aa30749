/**
 * UI/CLI equivalence: a headless session driven by every shipped golden
 * script must produce buffers bit-identical to the `azobra replay`
 * results frozen in fixtures/goldens.json (regenerate with
 * scripts/export_frontend_fixtures.py).
 */

import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { toHex } from "../src/codepoints.js";
import { BackspaceUnit } from "../src/engine.js";
import { parseScript } from "../src/replay.js";
import { TypingSession } from "../src/session.js";

function fixture(name: string): unknown {
  return JSON.parse(readFileSync(new URL(`../fixtures/${name}`, import.meta.url), "utf-8"));
}

interface GoldenFixture {
  name: string;
  layout: "desktop" | "mobile";
  backspaceUnit: BackspaceUnit;
  script: string;
  expectations: { line: number; hex: string }[];
  finalHex: string;
}

const layoutDocs = {
  desktop: fixture("desktop.json"),
  mobile: fixture("mobile.json"),
};

const goldens = fixture("goldens.json") as GoldenFixture[];

describe("UI/CLI equivalence over the golden suite", () => {
  it("has the whole suite to replay", () => {
    expect(goldens.length).toBeGreaterThanOrEqual(50);
  });

  for (const golden of goldens) {
    it(`matches azobra replay on ${golden.name}`, () => {
      const session = new TypingSession();
      const loaded = session.loadLayout(layoutDocs[golden.layout], golden.backspaceUnit);
      expect(loaded.ok).toBe(true);

      const checks: { line: number; hex: string }[] = [];
      for (const step of parseScript(golden.script)) {
        if (step.kind === "key") {
          const update = session.keyEvent(step.key, step.modifiers);
          expect(update.ok).toBe(true);
        } else if (step.kind === "popup") {
          const update = session.selectPopup(step.baseKey, step.index);
          expect(update.ok).toBe(true);
        } else {
          // the script's own expectation must hold in the UI buffer...
          expect(toHex(session.buffer)).toBe(toHex(step.expected));
          checks.push({ line: step.line, hex: toHex(session.buffer) });
        }
      }
      // ...and every document must equal what the CLI harness produced
      expect(checks).toEqual(golden.expectations);
      expect(toHex(session.buffer)).toBe(golden.finalHex);
    });
  }
});
