/**
 * Codepoint-level helpers for Idu Azobra text, mirroring the engine
 * package bit for bit: canonical combining-class data, mark reordering,
 * grapheme clusters, and the hex wire format used everywhere text
 * crosses a boundary.
 */

export const GRAVE = 0x0300;
export const ACUTE = 0x0301;
export const TILDE = 0x0303;
export const MACRON = 0x0304;
export const MACRON_BELOW = 0x0331;

/** Canonical combining classes for the marks the engine understands. */
export const COMBINING_CLASSES: ReadonlyMap<number, number> = new Map([
  [0x0300, 230], [0x0301, 230], [0x0302, 230], [0x0303, 230], [0x0304, 230],
  [0x0306, 230], [0x0307, 230], [0x0308, 230], [0x030a, 230], [0x030b, 230],
  [0x030c, 230],
  [0x0323, 220], [0x0324, 220], [0x0325, 220],
  [0x0327, 202], [0x0328, 202],
  [0x0330, 220], [0x0331, 220], [0x0332, 220],
]);

/** Combining class with unknown codepoints treated as starters. */
export function combiningClass(cp: number): number {
  return COMBINING_CLASSES.get(cp) ?? 0;
}

function codepoints(text: string): number[] {
  return Array.from(text, (ch) => ch.codePointAt(0)!);
}

/**
 * Stable-sort each maximal run of combining marks by ascending class.
 * Starters never move; ties keep their order; total over any text.
 */
export function repairOrder(text: string): string {
  const cps = codepoints(text);
  const out: number[] = [];
  let i = 0;
  while (i < cps.length) {
    if (combiningClass(cps[i]) === 0) {
      out.push(cps[i]);
      i += 1;
      continue;
    }
    let j = i;
    while (j < cps.length && combiningClass(cps[j]) !== 0) j += 1;
    const run = cps.slice(i, j)
      .map((cp, index) => ({ cp, index }))
      .sort((a, b) => combiningClass(a.cp) - combiningClass(b.cp) || a.index - b.index)
      .map((entry) => entry.cp);
    out.push(...run);
    i = j;
  }
  return String.fromCodePoint(...out);
}

export function isCanonical(text: string): boolean {
  return repairOrder(text) === text;
}

/** One starter plus its trailing marks per cluster; leading marks clump. */
export function graphemeSplit(text: string): string[] {
  const clusters: string[] = [];
  for (const ch of text) {
    if (clusters.length > 0 && combiningClass(ch.codePointAt(0)!) !== 0) {
      clusters[clusters.length - 1] += ch;
    } else {
      clusters.push(ch);
    }
  }
  return clusters;
}

/** "0259 0331" style rendering; the wire format for committed text. */
export function toHex(text: string): string {
  return codepoints(text)
    .map((cp) => cp.toString(16).toUpperCase().padStart(4, "0"))
    .join(" ");
}

export function fromHex(spec: string): string {
  const parts = spec.split(/\s+/).filter((p) => p.length > 0);
  const cps = parts.map((p) => {
    if (!/^[0-9A-Fa-f]+$/.test(p)) {
      throw new Error(`bad hex codepoint ${JSON.stringify(p)}`);
    }
    return parseInt(p, 16);
  });
  return String.fromCodePoint(...cps);
}
