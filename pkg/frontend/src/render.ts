/**
 * Pure view-model builders. Numbers are re-rendered with toFixed(4),
 * which reproduces the service's 4-decimal wire text exactly, so every
 * displayed figure is byte-traceable to the API response. No arithmetic
 * on domain values happens here (counting list entries is the only
 * aggregation).
 */

import type { RecommendResponse } from "./types.js";

export function fmt(value: number): string {
  return value.toFixed(4);
}

export interface GaugeView {
  totalNa: string;
  basicNa: string;
  tempNa: string;
  altiNa: string;
  dailyCalories: string;
  targetMg: string;
}

export function gaugeView(response: RecommendResponse): GaugeView {
  const need = response.sodium_need;
  return {
    totalNa: fmt(need.total_na),
    basicNa: fmt(need.basic_na),
    tempNa: fmt(need.temp_na),
    altiNa: fmt(need.alti_na),
    dailyCalories: fmt(need.daily_calories),
    targetMg: fmt(response.budget.target_mg),
  };
}

export interface ResultRow {
  itemId: string;
  name: string;
  restaurant: string;
  score: string;
  sodiumMg: string;
  distanceKm: string;
  open: boolean;
}

/** Rows in exactly the server's order; the client never re-sorts. */
export function resultRows(response: RecommendResponse): ResultRow[] {
  return response.results.map((row) => ({
    itemId: row.item_id,
    name: row.name,
    restaurant: row.restaurant_name,
    score: fmt(row.score),
    sodiumMg: fmt(row.sodium_mg),
    distanceKm: fmt(row.distance_km),
    open: true, // every returned item passed the availability filter
  }));
}

export function exclusionCounts(response: RecommendResponse): Record<string, number> {
  const counts: Record<string, number> = {};
  for (const [, reason] of response.filter_report.exclusions) {
    counts[reason] = (counts[reason] ?? 0) + 1;
  }
  return counts;
}

export function emptyStateMessage(response: RecommendResponse): string | null {
  if (response.results.length > 0) return null;
  const counts = exclusionCounts(response);
  const parts = Object.keys(counts)
    .sort()
    .map((reason) => `${reason}: ${counts[reason]}`);
  return parts.length
    ? `no matching meals (${parts.join(", ")})`
    : "no matching meals (catalog is empty)";
}
