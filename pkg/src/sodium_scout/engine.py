"""Pipeline orchestration: pre-filter, score, rank, and batch runs.

``recommend`` composes the full pipeline deterministically:
exogenous filter, endogenous filter, sodium need, meal budget, health
score, top-k. ``run_scenarios`` replays a grid of (user, scenario)
pairs against a catalog file and writes byte-stable JSON results plus a
summary table of daily calories and sodium need per pair.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from datetime import timezone
from pathlib import Path
from typing import Any

from .catalog import Catalog, haversine_km, load_catalog
from .filters import (
    FilterReport,
    QueryContext,
    filter_endogenous,
    filter_exogenous,
)
from .physio import ScenarioInput, SodiumNeed, UserProfile, sodium_need
from .ranking import (
    DEFAULT_MEAL_FRACTION,
    MealBudget,
    health_score,
    meal_budget,
    top_k,
)
from . import wire
from .wire import MalformedRequest, dumps_canonical

DEFAULT_K = 10


@dataclass(frozen=True)
class RecommendRequest:
    profile: UserProfile
    scenario: ScenarioInput
    query: QueryContext
    k: int = DEFAULT_K
    meal_fraction: float = DEFAULT_MEAL_FRACTION

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"k must be non-negative, got {self.k}")


@dataclass(frozen=True)
class ResultEntry:
    """One ranked result, enriched with display names for consumers."""

    item_id: str
    score: float
    sodium_mg: float
    distance_km: float
    name: str
    restaurant_id: str
    restaurant_name: str


@dataclass(frozen=True)
class RecommendResponse:
    sodium_need: SodiumNeed
    budget: MealBudget
    results: tuple[ResultEntry, ...]
    filter_report: FilterReport
    catalog_version: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "results", tuple(self.results))


def recommend(req: RecommendRequest, catalog: Catalog) -> RecommendResponse:
    """Run the full pipeline for one user against a catalog snapshot.

    Deterministic for a fixed (request, snapshot) pair: items enter the
    pipeline in item_id order and every later stage is order-stable.
    An empty result list is a valid outcome, not an error.
    """
    items = catalog.items_sorted()
    exo_kept, exo_report = filter_exogenous(items, catalog, req.query)
    endo_kept, endo_report = filter_endogenous(exo_kept, req.profile)

    need = sodium_need(req.profile, req.scenario)
    budget = meal_budget(need, req.meal_fraction)
    scores = [health_score(item.sodium_mg, budget) for item in endo_kept]
    distances = [
        haversine_km(
            catalog.restaurants[item.restaurant_id].location, req.query.user_location
        )
        for item in endo_kept
    ]
    ranked = top_k(scores, endo_kept, req.k, distances)

    results = []
    for entry in ranked.entries:
        item = catalog.items[entry.item_id]
        restaurant = catalog.restaurants[item.restaurant_id]
        results.append(
            ResultEntry(
                item_id=entry.item_id,
                score=entry.score,
                sodium_mg=entry.sodium_mg,
                distance_km=entry.distance_km,
                name=item.name,
                restaurant_id=restaurant.restaurant_id,
                restaurant_name=restaurant.name,
            )
        )
    merged = FilterReport(
        input_count=len(items),
        passed_count=len(endo_kept),
        exclusions=tuple(exo_report.exclusions) + tuple(endo_report.exclusions),
    )
    return RecommendResponse(
        sodium_need=need,
        budget=budget,
        results=tuple(results),
        filter_report=merged,
        catalog_version=catalog.fingerprint,
    )


def wire_result_entry(entry: ResultEntry) -> dict:
    return {
        "item_id": entry.item_id,
        "name": entry.name,
        "restaurant_id": entry.restaurant_id,
        "restaurant_name": entry.restaurant_name,
        "score": entry.score,
        "sodium_mg": entry.sodium_mg,
        "distance_km": entry.distance_km,
    }


def wire_response(response: RecommendResponse) -> dict:
    return {
        "sodium_need": wire.wire_sodium_need(response.sodium_need),
        "budget": wire.wire_budget(response.budget),
        "results": [wire_result_entry(e) for e in response.results],
        "filter_report": wire.wire_filter_report(response.filter_report),
        "catalog_version": response.catalog_version,
    }


def parse_recommend_request(
    obj: Any, default_radius_km: float = 30.0
) -> RecommendRequest:
    """Decode a request body; query defaults to the scenario's place/time."""
    obj = wire.as_object(obj, "request")
    profile = wire.parse_profile(wire.require_field(obj, "profile", "request"))
    scenario = wire.parse_scenario(wire.require_field(obj, "scenario", "request"))
    query = wire.parse_query(obj.get("query"), scenario, default_radius_km)
    k = DEFAULT_K
    if "k" in obj:
        k = wire.as_int(obj["k"], "request.k")
    meal_fraction = DEFAULT_MEAL_FRACTION
    if "meal_fraction" in obj:
        meal_fraction = wire.as_number(obj["meal_fraction"], "request.meal_fraction")
    return RecommendRequest(
        profile=profile, scenario=scenario, query=query, k=k,
        meal_fraction=meal_fraction,
    )


def _safe_name(identifier: str) -> str:
    return "".join(c if c.isalnum() or c in "-_." else "_" for c in identifier)


def _load_json_file(path: Path, what: str) -> Any:
    try:
        return json.loads(path.read_text("utf-8"))
    except json.JSONDecodeError as exc:
        raise MalformedRequest(f"{what} file {path}: invalid JSON ({exc.msg})") from exc


def run_scenarios(
    profiles_file: str | Path,
    scenarios_file: str | Path,
    catalog_file: str | Path,
    out_dir: str | Path,
    k: int = DEFAULT_K,
    meal_fraction: float = DEFAULT_MEAL_FRACTION,
    radius_km: float = 30.0,
    hours_tz=None,
) -> int:
    """Replay every (user, scenario) pair; returns a process exit code.

    Writes ``<user>__<scenario>.json`` per pair plus ``summary.csv``
    with integer-rounded daily calories and total sodium, one row per
    pair in input order. Output bytes are identical across reruns.
    """
    tz = hours_tz if hours_tz is not None else timezone.utc
    try:
        profiles_raw = _load_json_file(Path(profiles_file), "profiles")
        scenarios_raw = _load_json_file(Path(scenarios_file), "scenarios")
        if not isinstance(profiles_raw, list):
            raise MalformedRequest("profiles file must hold a JSON array")
        if not isinstance(scenarios_raw, list):
            raise MalformedRequest("scenarios file must hold a JSON array")
        profiles = [
            wire.parse_profile(entry, f"profiles[{i}]")
            for i, entry in enumerate(profiles_raw)
        ]
        scenarios = []
        for i, entry in enumerate(scenarios_raw):
            where = f"scenarios[{i}]"
            entry = wire.as_object(entry, where)
            scenario_id = str(entry.get("scenario_id", f"s{i}"))
            payload = {key: val for key, val in entry.items() if key != "scenario_id"}
            scenarios.append((scenario_id, wire.parse_scenario(payload, where)))
        catalog = load_catalog(catalog_file, hours_tz=tz)

        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        summary_lines = ["user,scenario,calories_per_day,sodium_mg"]
        for profile in profiles:
            for scenario_id, scenario in scenarios:
                query = QueryContext(
                    user_location=scenario.location,
                    query_time=scenario.query_time,
                    radius_km=radius_km,
                )
                request = RecommendRequest(
                    profile=profile, scenario=scenario, query=query,
                    k=k, meal_fraction=meal_fraction,
                )
                response = recommend(request, catalog)
                body = {
                    "user_id": profile.user_id,
                    "scenario_id": scenario_id,
                    **wire_response(response),
                }
                name = f"{_safe_name(profile.user_id)}__{_safe_name(scenario_id)}.json"
                (out / name).write_bytes(
                    (dumps_canonical(body) + "\n").encode("utf-8")
                )
                need = response.sodium_need
                summary_lines.append(
                    f"{profile.user_id},{scenario_id},"
                    f"{round(need.daily_calories)},{round(need.total_na)}"
                )
        (out / "summary.csv").write_bytes(
            ("\n".join(summary_lines) + "\n").encode("utf-8")
        )
    except (OSError, ValueError) as exc:
        print(f"run-scenarios failed: {exc}", file=sys.stderr)
        return 1
    return 0
