/**
 * Typing-tester app: layout picker, virtual keyboard, document buffer,
 * dead-key pending indicator, and codepoint inspector. All text in the
 * buffer comes from engine EditCommands; the inspector always shows
 * hex, so missing font glyphs can never hide a bug.
 */

import { toHex } from "./codepoints.js";
import { BackspaceUnit } from "./engine.js";
import { renderKeyboard, renderPopupStrip, ACCENT_GLYPHS } from "./keyboard.js";
import { Layout, Modifier, parseLayout } from "./layout.js";
import { TypingSession } from "./session.js";

const LONG_PRESS_MS = 500;

const session = new TypingSession();
let layout: Layout | null = null;
let layoutDoc: unknown = null;
let stickyShift = false;
let stickyAltGr = false;
let openPopup: HTMLElement | null = null;

const el = {
  picker: document.getElementById("layout-picker") as HTMLSelectElement,
  unitToggle: document.getElementById("backspace-unit") as HTMLSelectElement,
  resetButton: document.getElementById("reset") as HTMLButtonElement,
  banner: document.getElementById("error-banner") as HTMLDivElement,
  keyboard: document.getElementById("keyboard") as HTMLDivElement,
  buffer: document.getElementById("buffer") as HTMLDivElement,
  bufferHex: document.getElementById("buffer-hex") as HTMLDivElement,
  pending: document.getElementById("pending") as HTMLDivElement,
  inspector: document.getElementById("inspector") as HTMLTableSectionElement,
  shift: document.getElementById("mod-shift") as HTMLButtonElement,
  altgr: document.getElementById("mod-altgr") as HTMLButtonElement,
  layoutFile: document.getElementById("layout-file") as HTMLInputElement,
};

function showError(message: string): void {
  el.banner.textContent = message;
  el.banner.hidden = false;
  el.keyboard.textContent = "";
}

function clearError(): void {
  el.banner.hidden = true;
}

function activeModifiers(): Modifier[] {
  const mods: Modifier[] = [];
  if (stickyShift) mods.push("shift");
  if (stickyAltGr) mods.push("altgr");
  return mods;
}

function closePopup(): void {
  openPopup?.remove();
  openPopup = null;
}

function pressKey(key: string): void {
  closePopup();
  const update = session.keyEvent(key, activeModifiers());
  if (!update.ok) showError(update.error ?? "engine error");
  stickyShift = false;
  stickyAltGr = false;
  refresh();
}

function longPress(key: string, anchor: HTMLElement): void {
  if (layout === null) return;
  closePopup();
  const popup = renderPopupStrip(anchor, layout, key, (index) => {
    const update = session.selectPopup(key, index);
    if (!update.ok) showError(update.error ?? "engine error");
    closePopup();
    refresh();
  });
  if (popup !== null) {
    document.body.appendChild(popup);
    openPopup = popup;
  }
}

function refresh(): void {
  el.buffer.textContent = session.buffer;
  el.bufferHex.textContent = session.buffer ? toHex(session.buffer) : "(empty)";

  if (session.pending !== null) {
    const glyph = ACCENT_GLYPHS[session.pending as keyof typeof ACCENT_GLYPHS] ?? "";
    el.pending.textContent = `dead key pending: ${session.pending} ${glyph}`;
    el.pending.hidden = false;
  } else {
    el.pending.hidden = true;
  }

  el.inspector.textContent = "";
  for (const row of session.inspectorRows()) {
    const tr = document.createElement("tr");
    const cells = [
      row.hex,
      String(row.ccc),
      row.clusterStart ? `cluster ${row.cluster}` : "·",
      row.glyph,
    ];
    for (const text of cells) {
      const td = document.createElement("td");
      td.textContent = text;
      tr.appendChild(td);
    }
    el.inspector.appendChild(tr);
  }

  el.shift.classList.toggle("active", stickyShift);
  el.altgr.classList.toggle("active", stickyAltGr);
  el.altgr.disabled = layout?.platform !== "desktop";
}

function activateLayout(doc: unknown): void {
  try {
    layout = parseLayout(doc);
  } catch (exc) {
    layout = null;
    showError(`layout load failed: ${(exc as Error).message}`);
    refresh();
    return;
  }
  layoutDoc = doc;
  clearError();
  const update = session.loadLayout(doc, el.unitToggle.value as BackspaceUnit);
  if (!update.ok) {
    showError(`layout load failed: ${update.error}`);
    return;
  }
  renderKeyboard(el.keyboard, layout, {
    onKey: pressKey,
    onLongPressStart: longPress,
  }, LONG_PRESS_MS);
  refresh();
}

async function loadBuiltin(name: string): Promise<void> {
  try {
    const response = await fetch(`./fixtures/${name}.json`);
    if (!response.ok) throw new Error(`HTTP ${response.status}`);
    activateLayout(await response.json());
  } catch (exc) {
    showError(`could not fetch layout: ${(exc as Error).message}`);
  }
}

// --- physical keyboard ---------------------------------------------------

const PHYSICAL_KEYS: Record<string, string> = {
  "`": "backtick",
  "'": "apostrophe",
  "~": "tilde",
  "-": "hyphen",
  " ": "space",
  Backspace: "backspace",
};

function physicalKeyId(event: KeyboardEvent): string | null {
  if (event.key in PHYSICAL_KEYS) return PHYSICAL_KEYS[event.key];
  if (/^[a-zA-Z0-9]$/.test(event.key)) return event.key.toLowerCase();
  return null;
}

function onPhysicalKey(event: KeyboardEvent): void {
  const key = physicalKeyId(event);
  if (key === null || layout === null) return;
  const altgr = event.getModifierState("AltGraph") || (event.ctrlKey && event.altKey);
  const mods: Modifier[] = [];
  if (event.shiftKey) mods.push("shift");
  if (altgr) mods.push("altgr");
  else {
    if (event.ctrlKey) mods.push("ctrl");
    if (event.altKey) mods.push("alt");
  }
  closePopup();
  const update = session.keyEvent(key, mods);
  if (update.suppressed) event.preventDefault();
  refresh();
}

// --- wiring --------------------------------------------------------------

el.picker.addEventListener("change", () => void loadBuiltin(el.picker.value));
el.unitToggle.addEventListener("change", () => {
  session.setBackspaceUnit(el.unitToggle.value as BackspaceUnit);
});
el.resetButton.addEventListener("click", () => {
  session.reset();
  refresh();
});
el.shift.addEventListener("click", () => {
  stickyShift = !stickyShift;
  refresh();
});
el.altgr.addEventListener("click", () => {
  stickyAltGr = !stickyAltGr;
  refresh();
});
el.layoutFile.addEventListener("change", () => {
  const file = el.layoutFile.files?.[0];
  if (file === undefined) return;
  void file.text().then((text) => {
    try {
      activateLayout(JSON.parse(text));
    } catch (exc) {
      showError(`layout load failed: ${(exc as Error).message}`);
    }
  });
});
document.addEventListener("keydown", onPhysicalKey);
document.addEventListener("click", (event) => {
  if (openPopup !== null && !openPopup.contains(event.target as Node)) closePopup();
}, true);

void loadBuiltin("desktop");
export { layoutDoc }; // handy for console poking
