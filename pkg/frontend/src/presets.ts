/**
 * Reference profiles and scenarios, identical to the server's fixtures.
 * Preset buttons must send these values verbatim.
 */

import type { Profile, Scenario } from "./types.js";

export const PROFILES: Profile[] = [
  {
    user_id: "U1",
    height: 167,
    weight: 125,
    sex: "male",
    age: 29,
    health_status: "N",
    allergens: [],
    diet: "none",
  },
  {
    user_id: "U2",
    height: 190,
    weight: 290,
    sex: "male",
    age: 37,
    health_status: "O",
    allergens: [],
    diet: "none",
  },
  {
    user_id: "U3",
    height: 155,
    weight: 85,
    sex: "female",
    age: 18,
    health_status: "MA",
    allergens: [],
    diet: "none",
  },
];

export const QUERY_TIME = "2025-03-05T12:30:00-08:00";

export const SCENARIO_PRESETS: Record<string, Scenario> = {
  workday: {
    steps: 2400,
    floors: 12,
    altitude: 20,
    temperature: 70,
    query_time: QUERY_TIME,
    location: [34.05, -118.25],
  },
  hiking: {
    steps: 30650,
    floors: 207,
    altitude: 10700,
    temperature: 42,
    query_time: QUERY_TIME,
    location: [37.8651, -119.5383],
  },
  beach: {
    steps: 7430,
    floors: 31,
    altitude: 0,
    temperature: 92,
    query_time: QUERY_TIME,
    location: [33.6189, -117.9289],
  },
};

export const PRESET_NAMES = Object.keys(SCENARIO_PRESETS);
