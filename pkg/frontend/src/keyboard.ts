/**
 * Virtual keyboard rendering: QWERTY key grid with AltGr legends and
 * dead-key markers on desktop, long-pressable key markers and popup
 * strips on mobile.
 */

import { AccentId, KEY_CHARS, Layout, chord, chordId, deadKeyFor, popupFor } from "./layout.js";

export const KEY_ROWS: string[][] = [
  ["backtick", "1", "2", "3", "4", "5", "6", "7", "8", "9", "0", "hyphen"],
  ["q", "w", "e", "r", "t", "y", "u", "i", "o", "p"],
  ["a", "s", "d", "f", "g", "h", "j", "k", "l", "apostrophe"],
  ["z", "x", "c", "v", "b", "n", "m", "tilde"],
];

export const ACCENT_GLYPHS: Record<AccentId, string> = {
  grave: "◌̀",
  acute: "◌́",
  nasal: "◌̃",
  macron: "◌̄",
};

export interface KeyHandlers {
  onKey: (key: string) => void;
  onLongPressStart?: (key: string, anchor: HTMLElement) => void;
  onLongPressEnd?: () => void;
}

function keyFace(key: string): string {
  return KEY_CHARS[key] ?? key;
}

export function renderKeyboard(
  container: HTMLElement,
  layout: Layout,
  handlers: KeyHandlers,
  longPressMs = 500,
): void {
  container.textContent = "";
  for (const row of KEY_ROWS) {
    const rowEl = document.createElement("div");
    rowEl.className = "kb-row";
    for (const key of row) {
      rowEl.appendChild(buildKey(key, layout, handlers, longPressMs));
    }
    container.appendChild(rowEl);
  }

  const bottom = document.createElement("div");
  bottom.className = "kb-row";
  const space = buildKey("space", layout, handlers, longPressMs);
  space.classList.add("kb-space");
  space.textContent = "space";
  const backspace = buildKey("backspace", layout, handlers, longPressMs);
  backspace.classList.add("kb-wide");
  backspace.textContent = "⌫ backspace";
  bottom.append(space, backspace);
  container.appendChild(bottom);
}

function buildKey(key: string, layout: Layout, handlers: KeyHandlers, longPressMs: number): HTMLElement {
  const el = document.createElement("button");
  el.type = "button";
  el.className = "kb-key";
  el.dataset.key = key;

  const main = document.createElement("span");
  main.className = "kb-main";
  main.textContent = keyFace(key);
  el.appendChild(main);

  if (layout.platform === "desktop") {
    const altgrChord = chord(key, "altgr");
    const mapping = layout.direct.get(chordId(altgrChord));
    const dead = deadKeyFor(layout, altgrChord);
    if (mapping !== undefined) {
      const legend = document.createElement("span");
      legend.className = "kb-legend";
      legend.textContent = mapping.output;
      el.appendChild(legend);
    } else if (dead !== undefined) {
      const legend = document.createElement("span");
      legend.className = "kb-legend kb-dead";
      legend.textContent = ACCENT_GLYPHS[dead.accent];
      el.title = `dead key: ${dead.accent}`;
      el.appendChild(legend);
    }
  } else if (popupFor(layout, key) !== undefined) {
    el.classList.add("kb-longpressable");
    el.title = "long-press for variants";
  }

  if (layout.platform === "mobile" && popupFor(layout, key) !== undefined) {
    attachLongPress(el, key, handlers, longPressMs);
  } else {
    el.addEventListener("click", () => handlers.onKey(key));
  }
  return el;
}

function attachLongPress(el: HTMLElement, key: string, handlers: KeyHandlers, longPressMs: number): void {
  let timer: number | null = null;
  let longPressed = false;

  const cancel = () => {
    if (timer !== null) {
      window.clearTimeout(timer);
      timer = null;
    }
  };

  el.addEventListener("pointerdown", () => {
    longPressed = false;
    cancel();
    timer = window.setTimeout(() => {
      longPressed = true;
      handlers.onLongPressStart?.(key, el);
    }, longPressMs);
  });
  el.addEventListener("pointerup", () => {
    cancel();
    if (!longPressed) handlers.onKey(key); // tap falls back to the plain letter
  });
  el.addEventListener("pointerleave", cancel);
}

export function renderPopupStrip(
  anchor: HTMLElement,
  layout: Layout,
  key: string,
  onSelect: (index: number) => void,
): HTMLElement | null {
  const strip = popupFor(layout, key);
  if (strip === undefined) return null;
  const el = document.createElement("div");
  el.className = "kb-popup";
  strip.entries.forEach((entry, index) => {
    const button = document.createElement("button");
    button.type = "button";
    button.className = "kb-popup-entry";
    button.textContent = entry;
    button.addEventListener("click", () => onSelect(index));
    el.appendChild(button);
  });
  const rect = anchor.getBoundingClientRect();
  el.style.left = `${rect.left + window.scrollX}px`;
  el.style.top = `${rect.top + window.scrollY - 8}px`;
  return el;
}
