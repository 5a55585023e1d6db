/** Shared small formatting helpers. */

export function fmtCount(value: number | null): string {
  return value === null ? "n/a" : value.toLocaleString("en-US");
}

export function fmtParams(millions: number | null): string {
  if (millions === null) {
    return "n/a";
  }
  return millions >= 1000 ? `${(millions / 1000).toFixed(1)}B` : `${millions}M`;
}

export function communityColor(id: number): string {
  // golden-angle hue walk keeps adjacent ids visually distinct
  const hue = (id * 137.508) % 360;
  return `hsl(${hue.toFixed(1)}, 65%, 52%)`;
}
