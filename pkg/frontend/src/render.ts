// Pure formatting helpers for advice display; the recommendation shown
// is always the service's recommended_index, never recomputed here.

import type { AdviceEntry, AdviseResponse } from "./types";

export function fractionLabel(entry: AdviceEntry): string {
  if (entry.value_numerator === 0) {
    return "0";
  }
  return `${entry.value_numerator}/${entry.value_denominator}`;
}

export function recommendedEntry(advice: AdviseResponse): AdviceEntry {
  return advice.entries[advice.recommended_index];
}

export function adviceSummary(advice: AdviseResponse): string {
  const entry = recommendedEntry(advice);
  return `discard ${entry.tile} (${fractionLabel(entry)})`;
}

export function noCompletionWithinHorizon(advice: AdviseResponse): boolean {
  return advice.entries.every((e) => e.value_numerator === 0);
}
