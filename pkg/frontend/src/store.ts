/**
 * What-if state machine: slider edits debounce into /recommend calls,
 * stale responses are discarded, and a failed call shows a banner while
 * keeping the last good results on screen.
 *
 * The store never computes domain numbers itself; everything displayed
 * comes out of the last applied service response.
 */

import { PROFILES, SCENARIO_PRESETS } from "./presets.js";
import type { RecommendBody, RecommendResponse, Scenario } from "./types.js";

export type SliderField = "steps" | "floors" | "altitude" | "temperature";

export const SLIDER_LIMITS: Record<SliderField, { min: number; max: number }> = {
  steps: { min: 0, max: 40000 },
  floors: { min: 0, max: 250 },
  altitude: { min: 0, max: 12000 },
  temperature: { min: 0, max: 110 },
};

export const DEBOUNCE_MS = 250;

export interface UiState {
  profileIndex: number;
  steps: number;
  floors: number;
  altitude: number;
  temperature: number;
  location: [number, number];
  queryTime: string;
  radiusKm: number;
  k: number;
  lastResponse: RecommendResponse | null;
  requestInFlight: boolean;
  error: string | null;
}

export interface StoreOptions {
  api: (body: RecommendBody) => Promise<RecommendResponse>;
  debounceMs?: number;
  onChange?: (state: UiState) => void;
}

function clamp(field: SliderField, value: number): number {
  const { min, max } = SLIDER_LIMITS[field];
  return Math.min(max, Math.max(min, value));
}

export class WhatIfStore {
  private state: UiState;
  private readonly api: StoreOptions["api"];
  private readonly debounceMs: number;
  private readonly onChange?: (state: UiState) => void;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private latestRequestId = 0;

  constructor(options: StoreOptions) {
    this.api = options.api;
    this.debounceMs = options.debounceMs ?? DEBOUNCE_MS;
    this.onChange = options.onChange;
    const workday = SCENARIO_PRESETS["workday"];
    this.state = {
      profileIndex: 0,
      steps: workday.steps,
      floors: workday.floors,
      altitude: workday.altitude,
      temperature: workday.temperature,
      location: [...workday.location] as [number, number],
      queryTime: workday.query_time,
      radiusKm: 30,
      k: 10,
      lastResponse: null,
      requestInFlight: false,
      error: null,
    };
  }

  getState(): UiState {
    return this.state;
  }

  /** Slider edit: clamps to the field's range; no-ops issue no request. */
  setSlider(field: SliderField, rawValue: number): void {
    const value = clamp(field, rawValue);
    if (this.state[field] === value) return;
    this.state = { ...this.state, [field]: value };
    this.notify();
    this.schedule();
  }

  setProfile(index: number): void {
    if (index < 0 || index >= PROFILES.length || index === this.state.profileIndex) {
      return;
    }
    this.state = { ...this.state, profileIndex: index };
    this.notify();
    this.schedule();
  }

  setLocation(lat: number, lon: number): void {
    const [curLat, curLon] = this.state.location;
    if (lat === curLat && lon === curLon) return;
    this.state = { ...this.state, location: [lat, lon] };
    this.notify();
    this.schedule();
  }

  setQueryTime(iso: string): void {
    if (iso === this.state.queryTime) return;
    this.state = { ...this.state, queryTime: iso };
    this.notify();
    this.schedule();
  }

  /** Loads a named scenario preset verbatim and always issues a request. */
  applyPreset(name: string): void {
    const preset: Scenario | undefined = SCENARIO_PRESETS[name];
    if (!preset) throw new Error(`unknown preset ${name}`);
    this.state = {
      ...this.state,
      steps: preset.steps,
      floors: preset.floors,
      altitude: preset.altitude,
      temperature: preset.temperature,
      location: [...preset.location] as [number, number],
      queryTime: preset.query_time,
    };
    this.notify();
    this.schedule();
  }

  buildBody(): RecommendBody {
    return {
      profile: PROFILES[this.state.profileIndex],
      scenario: {
        steps: this.state.steps,
        floors: this.state.floors,
        altitude: this.state.altitude,
        temperature: this.state.temperature,
        query_time: this.state.queryTime,
        location: [...this.state.location] as [number, number],
      },
      query: { radius_km: this.state.radiusKm },
      k: this.state.k,
    };
  }

  /** Fire any pending debounced request immediately. */
  flush(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
      void this.send();
    }
  }

  /** Request the current state right away (initial page load). */
  refresh(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    void this.send();
  }

  private schedule(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.send();
    }, this.debounceMs);
  }

  private async send(): Promise<void> {
    const requestId = ++this.latestRequestId;
    this.state = { ...this.state, requestInFlight: true };
    this.notify();
    try {
      const response = await this.api(this.buildBody());
      if (requestId !== this.latestRequestId) return; // superseded; discard
      this.state = {
        ...this.state,
        lastResponse: response,
        error: null,
        requestInFlight: false,
      };
    } catch (error) {
      if (requestId !== this.latestRequestId) return;
      // keep the last good response on screen, just raise the banner
      this.state = {
        ...this.state,
        error: error instanceof Error ? error.message : String(error),
        requestInFlight: false,
      };
    }
    this.notify();
  }

  private notify(): void {
    this.onChange?.(this.state);
  }
}
