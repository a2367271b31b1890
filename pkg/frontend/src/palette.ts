/** Fixed overlay palette indexed by slot id, stable across regenerations. */

export const SLOT_PALETTE = [
  "#e6194b",
  "#3cb44b",
  "#4363d8",
  "#f58231",
  "#911eb4",
  "#46f0f0",
  "#f032e6",
  "#bcf60c",
  "#fabebe",
  "#008080",
] as const;

export function slotColor(i: number): string {
  if (i < 0) throw new Error(`slot index must be >= 0, got ${i}`);
  return SLOT_PALETTE[i % SLOT_PALETTE.length]!;
}
