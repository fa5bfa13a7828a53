/** Display helpers: 3-decimal text like the tables in the literature,
 * full precision on hover, and the heatmap color scale. */

export function fmt3(x: number): string {
  return x.toFixed(3);
}

export function fmtFull(x: number): string {
  return String(x);
}

/** Parse a grid cell's text: plain number or a fraction like "1/3". */
export function parseCellValue(text: string): number | null {
  const trimmed = text.trim();
  if (trimmed === "") return null;
  let value: number;
  if (trimmed.includes("/")) {
    const [numText, denText, ...rest] = trimmed.split("/");
    if (rest.length > 0) return null;
    const num = Number(numText);
    const den = Number(denText);
    if (!Number.isFinite(num) || !Number.isFinite(den) || den === 0) return null;
    value = num / den;
  } else {
    value = Number(trimmed);
  }
  if (!Number.isFinite(value) || value <= 0) return null;
  return value;
}

/**
 * Heatmap color for a local discrepancy value.
 *
 * Sequential white -> deep red, anchored at 0 and at the current global
 * discrepancy: the worst cell is always full strength regardless of how
 * small the discrepancies get.
 */
export function heatColor(value: number, globalMax: number): string {
  const t = globalMax > 0 ? Math.min(Math.max(value / globalMax, 0), 1) : 0;
  const r = 255;
  const g = Math.round(245 - 175 * t);
  const b = Math.round(240 - 190 * t);
  return `rgb(${r - Math.round(25 * t)}, ${g}, ${b})`;
}

/** Keys for pair/quad lookups in overlay sets. */
export function pairKey(i: number, j: number): string {
  return `${i},${j}`;
}

export function quadKey(i: number, j: number, k: number, l: number): string {
  return `${i},${j},${k},${l}`;
}
