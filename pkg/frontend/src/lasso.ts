/** Freeform selection: even-odd point-in-polygon at glyph centers. */

export type Point = [number, number];

/** Even-odd (ray casting) membership test. */
export function pointInPolygon(p: Point, polygon: Point[]): boolean {
  const [px, py] = p;
  let inside = false;
  for (let i = 0, j = polygon.length - 1; i < polygon.length; j = i++) {
    const [xi, yi] = polygon[i];
    const [xj, yj] = polygon[j];
    const crosses =
      yi > py !== yj > py && px < ((xj - xi) * (py - yi)) / (yj - yi) + xi;
    if (crosses) inside = !inside;
  }
  return inside;
}

/**
 * Ids of the points whose centers fall inside the lasso polygon.
 * A degenerate polygon (fewer than 3 vertices) selects nothing.
 */
export function lassoSelect(
  polygon: Point[],
  points: { id: number; x: number; y: number }[],
): number[] {
  if (polygon.length < 3) return [];
  return points
    .filter((p) => pointInPolygon([p.x, p.y], polygon))
    .map((p) => p.id)
    .sort((a, b) => a - b);
}
