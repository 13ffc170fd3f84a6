/** Wire types mirroring the recommendation service's JSON schemas. */

export interface Profile {
  user_id: string;
  height: number;
  weight: number;
  sex: "male" | "female";
  age: number;
  health_status: string;
  allergens: string[];
  diet: "none" | "vegetarian" | "vegan";
}

export interface Scenario {
  steps: number;
  floors: number;
  altitude: number;
  temperature: number;
  query_time: string;
  location: [number, number];
}

export interface RecommendBody {
  profile: Profile;
  scenario: Scenario;
  query: { radius_km: number };
  k: number;
}

export interface SodiumNeedWire {
  bmr: number;
  step_calories: number;
  stair_calories: number;
  daily_calories: number;
  basic_na: number;
  temp_na: number;
  alti_na: number;
  total_na: number;
}

export interface ResultRowWire {
  item_id: string;
  name: string;
  restaurant_id: string;
  restaurant_name: string;
  score: number;
  sodium_mg: number;
  distance_km: number;
}

export interface FilterReportWire {
  input_count: number;
  passed_count: number;
  exclusions: [string, string][];
}

export interface RecommendResponse {
  sodium_need: SodiumNeedWire;
  budget: { target_mg: number; source_total_mg: number; meal_fraction: number };
  results: ResultRowWire[];
  filter_report: FilterReportWire;
  catalog_version: string;
}
