/** Categorical colors matching the server-side SVG renderer. */

export const CATEGORY10 = [
  "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
] as const;

export const NEUTRAL_CELL = "#e8e8e8";

export function categoryColor(index: number): string {
  return CATEGORY10[index % CATEGORY10.length];
}

/** Mix a hex color toward white; cells use fraction 0.4. */
export function lightenHex(color: string, fraction: number): string {
  const mix = (v: number) => Math.round(v + (255 - v) * fraction);
  const channel = (i: number) => parseInt(color.slice(i, i + 2), 16);
  const hex = (v: number) => v.toString(16).padStart(2, "0");
  return `#${hex(mix(channel(1)))}${hex(mix(channel(3)))}${hex(mix(channel(5)))}`;
}

export function cellColor(index: number): string {
  return lightenHex(categoryColor(index), 0.4);
}
